const s0 = "// not a comment";
// end
