/* block
   continues here */
const s1 = "// not a comment";
const r2 = '/* not a block */';
let x3 = 1; /* trailing */
/* lead */ let y4 = 2;
/* a */ /* b */
module.exports.f6 = function () { return 6; };
// end
