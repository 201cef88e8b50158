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
// end
