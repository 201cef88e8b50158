const c0 = "abc\
// continued string";
// end
