const c0 = "abc\
// continued string";
   	  
var v2 = 2; // tail
  /* multi
  * line
  * doc */ var z3 = 3;
// header comment

/* block
   continues here */
const s7 = "// not a comment";
// end
