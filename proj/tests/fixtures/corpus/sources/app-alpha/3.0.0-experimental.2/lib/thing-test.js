/* a */ /* b */
const t1 = `first
// inside template
`;
const e2 = "esc \" // still string";
// end
