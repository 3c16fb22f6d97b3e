# C-complex for the Borromean rings: four clasps, two between each of
# components 1-2 and 1-3, none between 2 and 3.
components 3
clasp p 1 2 +
clasp q 1 2 -
clasp r 1 3 +
clasp s 1 3 -
order 1 s p r q
order 2 q p
order 3 s r
