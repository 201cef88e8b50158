const e0 = "esc \" // still string";
const w1 = 'a\\'; // real comment
const c2 = "abc\
// continued string";
   	  
var v4 = 4; // tail
// end
