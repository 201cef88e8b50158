var v0 = 0; // tail
// end
