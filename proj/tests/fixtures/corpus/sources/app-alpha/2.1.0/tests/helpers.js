  /* multi
  * line
  * doc */ var z0 = 3;
// header comment

/* block
   continues here */
const s4 = "// not a comment";
const r5 = '/* not a block */';
let x6 = 1; /* trailing */
/* lead */ let y7 = 2;
// end
