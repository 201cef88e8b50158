const r0 = '/* not a block */';
let x1 = 1; /* trailing */
/* lead */ let y2 = 2;
// end
