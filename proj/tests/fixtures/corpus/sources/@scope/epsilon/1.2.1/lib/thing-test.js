const c0 = "abc\
// continued string";
   	  
var v2 = 2; // tail
  /* multi
  * line
  * doc */ var z3 = 3;
// end
