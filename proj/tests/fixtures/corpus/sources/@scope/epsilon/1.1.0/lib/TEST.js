const w0 = 'a\\'; // real comment
module.exports.f1 = function () { return 1; };
// end
