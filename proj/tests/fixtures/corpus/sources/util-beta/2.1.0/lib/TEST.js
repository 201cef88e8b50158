/* lead */ let y0 = 2;
/* a */ /* b */
module.exports.f2 = function () { return 2; };
// end
