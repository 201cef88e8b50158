const e0 = "esc \" // still string";
const w1 = 'a\\'; // real comment
module.exports.f2 = function () { return 2; };
// end
