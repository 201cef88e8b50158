/* lead */ let y0 = 2;
/* a */ /* b */
const t2 = `first
// inside template
`;
// end
