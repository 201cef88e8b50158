let x0 = 1; /* trailing */
/* lead */ let y1 = 2;
/* a */ /* b */
const t3 = `first
// inside template
`;
const e4 = "esc \" // still string";
const w5 = 'a\\'; // real comment
const c6 = "abc\
// continued string";
   	  
var v8 = 8; // tail
  /* multi
  * line
  * doc */ var z9 = 3;
// header comment

/* block
   continues here */
const s13 = "// not a comment";
const r14 = '/* not a block */';
let x15 = 1; /* trailing */
/* lead */ let y16 = 2;
/* a */ /* b */
const t18 = `first
// inside template
`;
const e19 = "esc \" // still string";
const w20 = 'a\\'; // real comment
const c21 = "abc\
// continued string";
   	  
var v23 = 23; // tail
  /* multi
  * line
  * doc */ var z24 = 3;
// header comment

/* block
   continues here */
const s28 = "// not a comment";
const r29 = '/* not a block */';
let x30 = 1; /* trailing */
/* lead */ let y31 = 2;
/* a */ /* b */
const t33 = `first
// inside template
`;
const e34 = "esc \" // still string";
const w35 = 'a\\'; // real comment
const c36 = "abc\
// continued string";
   	  
var v38 = 38; // tail
  /* multi
  * line
  * doc */ var z39 = 3;
// header comment

/* block
   continues here */
const s43 = "// not a comment";
const r44 = '/* not a block */';
let x45 = 1; /* trailing */
/* lead */ let y46 = 2;
/* a */ /* b */
const t48 = `first
// inside template
`;
const e49 = "esc \" // still string";
const w50 = 'a\\'; // real comment
const c51 = "abc\
// continued string";
   	  
var v53 = 53; // tail
  /* multi
  * line
  * doc */ var z54 = 3;
// header comment

/* block
   continues here */
const s58 = "// not a comment";
const r59 = '/* not a block */';
let x60 = 1; /* trailing */
/* lead */ let y61 = 2;
/* a */ /* b */
const t63 = `first
// inside template
`;
// end
