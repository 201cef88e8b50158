   	  
var v1 = 1; // tail
// end
