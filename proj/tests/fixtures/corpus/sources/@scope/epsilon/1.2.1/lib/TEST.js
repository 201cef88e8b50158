const e0 = "esc \" // still string";
const w1 = 'a\\'; // real comment
// end
