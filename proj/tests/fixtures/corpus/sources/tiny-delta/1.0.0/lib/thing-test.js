var v0 = 0; // tail
  /* multi
  * line
  * doc */ var z1 = 3;
// header comment

/* block
   continues here */
const s5 = "// not a comment";
const r6 = '/* not a block */';
// end
