const w0 = 'a\\'; // real comment
const c1 = "abc\
// continued string";
   	  
var v3 = 3; // tail
  /* multi
  * line
  * doc */ var z4 = 3;
// header comment

/* block
   continues here */
const s8 = "// not a comment";
const r9 = '/* not a block */';
let x10 = 1; /* trailing */
/* lead */ let y11 = 2;
/* a */ /* b */
const t13 = `first
// inside template
`;
// end
