let x0 = 1; /* trailing */
/* lead */ let y1 = 2;
/* a */ /* b */
const t3 = `first
// inside template
`;
// end
