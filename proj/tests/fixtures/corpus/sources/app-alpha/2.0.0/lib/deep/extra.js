// header comment

/* block
   continues here */
const s3 = "// not a comment";
const r4 = '/* not a block */';
let x5 = 1; /* trailing */
/* lead */ let y6 = 2;
/* a */ /* b */
const t8 = `first
// inside template
`;
const e9 = "esc \" // still string";
const w10 = 'a\\'; // real comment
const c11 = "abc\
// continued string";
   	  
var v13 = 13; // tail
  /* multi
  * line
  * doc */ var z14 = 3;
// header comment

/* block
   continues here */
const s18 = "// not a comment";
const r19 = '/* not a block */';
let x20 = 1; /* trailing */
/* lead */ let y21 = 2;
/* a */ /* b */
const t23 = `first
// inside template
`;
const e24 = "esc \" // still string";
const w25 = 'a\\'; // real comment
const c26 = "abc\
// continued string";
   	  
var v28 = 28; // tail
  /* multi
  * line
  * doc */ var z29 = 3;
// header comment

/* block
   continues here */
const s33 = "// not a comment";
const r34 = '/* not a block */';
let x35 = 1; /* trailing */
/* lead */ let y36 = 2;
/* a */ /* b */
const t38 = `first
// inside template
`;
const e39 = "esc \" // still string";
const w40 = 'a\\'; // real comment
const c41 = "abc\
// continued string";
   	  
var v43 = 43; // tail
  /* multi
  * line
  * doc */ var z44 = 3;
// header comment

/* block
   continues here */
const s48 = "// not a comment";
const r49 = '/* not a block */';
let x50 = 1; /* trailing */
/* lead */ let y51 = 2;
/* a */ /* b */
const t53 = `first
// inside template
`;
const e54 = "esc \" // still string";
const w55 = 'a\\'; // real comment
const c56 = "abc\
// continued string";
   	  
var v58 = 58; // tail
  /* multi
  * line
  * doc */ var z59 = 3;
// header comment

/* block
   continues here */
const s63 = "// not a comment";
const r64 = '/* not a block */';
let x65 = 1; /* trailing */
/* lead */ let y66 = 2;
/* a */ /* b */
const t68 = `first
// inside template
`;
const e69 = "esc \" // still string";
const w70 = 'a\\'; // real comment
const c71 = "abc\
// continued string";
   	  
var v73 = 73; // tail
  /* multi
  * line
  * doc */ var z74 = 3;
// header comment

/* block
   continues here */
const s78 = "// not a comment";
const r79 = '/* not a block */';
let x80 = 1; /* trailing */
/* lead */ let y81 = 2;
/* a */ /* b */
const t83 = `first
// inside template
`;
const e84 = "esc \" // still string";
const w85 = 'a\\'; // real comment
const c86 = "abc\
// continued string";
   	  
var v88 = 88; // tail
  /* multi
  * line
  * doc */ var z89 = 3;
// header comment

/* block
   continues here */
const s93 = "// not a comment";
const r94 = '/* not a block */';
let x95 = 1; /* trailing */
/* lead */ let y96 = 2;
/* a */ /* b */
const t98 = `first
// inside template
`;
const e99 = "esc \" // still string";
const w100 = 'a\\'; // real comment
const c101 = "abc\
// continued string";
   	  
var v103 = 103; // tail
  /* multi
  * line
  * doc */ var z104 = 3;
// header comment

/* block
   continues here */
const s108 = "// not a comment";
const r109 = '/* not a block */';
let x110 = 1; /* trailing */
/* lead */ let y111 = 2;
/* a */ /* b */
const t113 = `first
// inside template
`;
const e114 = "esc \" // still string";
const w115 = 'a\\'; // real comment
const c116 = "abc\
// continued string";
   	  
var v118 = 118; // tail
  /* multi
  * line
  * doc */ var z119 = 3;
// header comment

/* block
   continues here */
const s123 = "// not a comment";
const r124 = '/* not a block */';
let x125 = 1; /* trailing */
/* lead */ let y126 = 2;
/* a */ /* b */
const t128 = `first
// inside template
`;
const e129 = "esc \" // still string";
const w130 = 'a\\'; // real comment
const c131 = "abc\
// continued string";
   	  
var v133 = 133; // tail
  /* multi
  * line
  * doc */ var z134 = 3;
// header comment

/* block
   continues here */
const s138 = "// not a comment";
const r139 = '/* not a block */';
let x140 = 1; /* trailing */
/* lead */ let y141 = 2;
/* a */ /* b */
const t143 = `first
// inside template
`;
const e144 = "esc \" // still string";
// end
