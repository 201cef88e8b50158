const r0 = '/* not a block */';
let x1 = 1; /* trailing */
/* lead */ let y2 = 2;
/* a */ /* b */
module.exports.f4 = function () { return 4; };
const e5 = "esc \" // still string";
// end
