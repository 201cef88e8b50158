const t0 = `first
// inside template
`;
const e1 = "esc \" // still string";
const w2 = 'a\\'; // real comment
// end
