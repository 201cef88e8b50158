const w0 = 'a\\'; // real comment
const c1 = "abc\
// continued string";
   	  
var v3 = 3; // tail
  /* multi
  * line
  * doc */ var z4 = 3;
// end
