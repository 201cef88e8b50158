let x0 = 1; /* trailing */
/* lead */ let y1 = 2;
// end
