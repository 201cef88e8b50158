// header comment

/* block
   continues here */
const s3 = "// not a comment";
const r4 = '/* not a block */';
// end
