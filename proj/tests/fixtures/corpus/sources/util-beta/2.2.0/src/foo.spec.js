const r0 = '/* not a block */';
let x1 = 1; /* trailing */
/* lead */ let y2 = 2;
/* a */ /* b */
const t4 = `first
// inside template
`;
// end
