excluded();
