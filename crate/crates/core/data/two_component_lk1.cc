# Two-component link with linking number 1, presented by a C-complex
# with three clasps (two positive, one negative).
components 2
clasp a 1 2 +
clasp b 1 2 -
clasp c 1 2 +
order 1 a b c
order 2 b c a
