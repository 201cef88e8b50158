/* lead */ let y0 = 2;
/* a */ /* b */
const t2 = `first
// inside template
`;
const e3 = "esc \" // still string";
const w4 = 'a\\'; // real comment
// end
