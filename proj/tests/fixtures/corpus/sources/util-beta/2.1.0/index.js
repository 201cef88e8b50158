/* block
   continues here */
const s1 = "// not a comment";
const r2 = '/* not a block */';
let x3 = 1; /* trailing */
/* lead */ let y4 = 2;
/* a */ /* b */
const t6 = `first
// inside template
`;
const e7 = "esc \" // still string";
const w8 = 'a\\'; // real comment
const c9 = "abc\
// continued string";
   	  
var v11 = 11; // tail
  /* multi
  * line
  * doc */ var z12 = 3;
// header comment

/* block
   continues here */
const s16 = "// not a comment";
const r17 = '/* not a block */';
let x18 = 1; /* trailing */
/* lead */ let y19 = 2;
/* a */ /* b */
const t21 = `first
// inside template
`;
const e22 = "esc \" // still string";
const w23 = 'a\\'; // real comment
const c24 = "abc\
// continued string";
   	  
var v26 = 26; // tail
  /* multi
  * line
  * doc */ var z27 = 3;
// header comment

/* block
   continues here */
const s31 = "// not a comment";
const r32 = '/* not a block */';
let x33 = 1; /* trailing */
/* lead */ let y34 = 2;
/* a */ /* b */
const t36 = `first
// inside template
`;
const e37 = "esc \" // still string";
const w38 = 'a\\'; // real comment
const c39 = "abc\
// continued string";
   	  
var v41 = 41; // tail
  /* multi
  * line
  * doc */ var z42 = 3;
// header comment

/* block
   continues here */
const s46 = "// not a comment";
const r47 = '/* not a block */';
let x48 = 1; /* trailing */
/* lead */ let y49 = 2;
/* a */ /* b */
const t51 = `first
// inside template
`;
const e52 = "esc \" // still string";
const w53 = 'a\\'; // real comment
const c54 = "abc\
// continued string";
   	  
var v56 = 56; // tail
  /* multi
  * line
  * doc */ var z57 = 3;
// header comment

/* block
   continues here */
const s61 = "// not a comment";
const r62 = '/* not a block */';
let x63 = 1; /* trailing */
/* lead */ let y64 = 2;
/* a */ /* b */
const t66 = `first
// inside template
`;
const e67 = "esc \" // still string";
const w68 = 'a\\'; // real comment
const c69 = "abc\
// continued string";
   	  
var v71 = 71; // tail
  /* multi
  * line
  * doc */ var z72 = 3;
// header comment

/* block
   continues here */
const s76 = "// not a comment";
const r77 = '/* not a block */';
let x78 = 1; /* trailing */
/* lead */ let y79 = 2;
/* a */ /* b */
const t81 = `first
// inside template
`;
const e82 = "esc \" // still string";
const w83 = 'a\\'; // real comment
const c84 = "abc\
// continued string";
   	  
var v86 = 86; // tail
  /* multi
  * line
  * doc */ var z87 = 3;
// header comment

/* block
   continues here */
const s91 = "// not a comment";
// end
