const s0 = "// not a comment";
const r1 = '/* not a block */';
let x2 = 1; /* trailing */
/* lead */ let y3 = 2;
/* a */ /* b */
module.exports.f5 = function () { return 5; };
// end
