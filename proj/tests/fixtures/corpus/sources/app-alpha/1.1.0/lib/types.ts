const s0 = "// not a comment";
const r1 = '/* not a block */';
let x2 = 1; /* trailing */
/* lead */ let y3 = 2;
/* a */ /* b */
const t5 = `first
// inside template
`;
const e6 = "esc \" // still string";
const w7 = 'a\\'; // real comment
// end
