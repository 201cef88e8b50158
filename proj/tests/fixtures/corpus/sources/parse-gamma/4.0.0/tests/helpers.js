   	  
var v1 = 1; // tail
  /* multi
  * line
  * doc */ var z2 = 3;
// header comment

/* block
   continues here */
const s6 = "// not a comment";
const r7 = '/* not a block */';
let x8 = 1; /* trailing */
// end
