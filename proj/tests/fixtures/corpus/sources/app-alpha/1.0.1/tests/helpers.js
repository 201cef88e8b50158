
/* block
   continues here */
const s2 = "// not a comment";
const r3 = '/* not a block */';
let x4 = 1; /* trailing */
/* lead */ let y5 = 2;
/* a */ /* b */
module.exports.f7 = function () { return 7; };
// end
