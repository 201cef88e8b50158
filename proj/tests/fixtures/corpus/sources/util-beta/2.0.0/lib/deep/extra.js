
/* block
   continues here */
const s2 = "// not a comment";
const r3 = '/* not a block */';
let x4 = 1; /* trailing */
/* lead */ let y5 = 2;
/* a */ /* b */
const t7 = `first
// inside template
`;
const e8 = "esc \" // still string";
const w9 = 'a\\'; // real comment
const c10 = "abc\
// continued string";
   	  
var v12 = 12; // tail
  /* multi
  * line
  * doc */ var z13 = 3;
// header comment

/* block
   continues here */
const s17 = "// not a comment";
const r18 = '/* not a block */';
let x19 = 1; /* trailing */
/* lead */ let y20 = 2;
/* a */ /* b */
const t22 = `first
// inside template
`;
const e23 = "esc \" // still string";
const w24 = 'a\\'; // real comment
const c25 = "abc\
// continued string";
   	  
var v27 = 27; // tail
  /* multi
  * line
  * doc */ var z28 = 3;
// header comment

/* block
   continues here */
const s32 = "// not a comment";
const r33 = '/* not a block */';
let x34 = 1; /* trailing */
/* lead */ let y35 = 2;
/* a */ /* b */
const t37 = `first
// inside template
`;
const e38 = "esc \" // still string";
const w39 = 'a\\'; // real comment
const c40 = "abc\
// continued string";
// end
