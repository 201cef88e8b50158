// header comment

/* block
   continues here */
const s3 = "// not a comment";
const r4 = '/* not a block */';
let x5 = 1; /* trailing */
/* lead */ let y6 = 2;
/* a */ /* b */
module.exports.f8 = function () { return 8; };
// end
