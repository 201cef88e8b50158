  /* multi
  * line
  * doc */ var z0 = 3;
// end
