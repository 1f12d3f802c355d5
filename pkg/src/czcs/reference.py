"""Published correlation values for the worked example family.

Parameters: m=5, q=4, blocks [[1,2,3],[4]], lambda=0, delta=3, giving an
(8, 24, 16) set.  Autocorrelation rows are indexed tau = 0..23 with the usual
``C(u, v)(tau) = sum w**(u_i - v_{i+tau})`` convention.  The cross rows were
tabulated with the opposite shift direction, i.e. entry tau of row sigma is
``C(a_sigma, a_{sigma+1})(-tau)``.  Row 0 of the cross table was printed with
26 entries; it is kept verbatim and flagged instead of compared.
"""

EXAMPLE_PARAMS = {"m": 5, "q": 4, "delta": 3, "partition": [[1, 2, 3], [4]], "lambda": [0, 0, 0, 0, 0]}

AACF_ROWS = (
    (24, -1, 2, 13, 0, 7, 2, 5, 8, -1, 8, 3, 0, 5, 0, 5, 0, -1, 6, -3, 0, 3, -2, 1),
    (24, 1, 2, -13, 0, -7, 2, -5, 8, 1, 8, -3, 0, -5, 0, -5, 0, 1, 6, 3, 0, -3, -2, -1),
    (24, -5, -2, 5, 0, -1, -2, 1, -8, 3, -4, 3, 0, -3, 4, 1, 0, -1, 6, -3, 0, 3, -2, 1),
    (24, 5, -2, -5, 0, 1, -2, -1, -8, -3, -4, -3, 0, 3, 4, -1, 0, 1, 6, 3, 0, -3, -2, -1),
    (24, -3, -2, 7, 0, 5, -2, -1, 8, -1, -8, 3, 0, -3, 0, -3, 0, 1, -6, 3, 0, -3, 2, -1),
    (24, 3, -2, -7, 0, -5, -2, 1, 8, 1, -8, -3, 0, 3, 0, 3, 0, -1, -6, -3, 0, 3, 2, 1),
    (24, -3, 2, 11, 0, 1, 2, 7, -8, -1, 4, -9, 0, 1, -4, -3, 0, 1, -6, 3, 0, -3, 2, -1),
    (24, 3, 2, -11, 0, -1, 2, -7, -8, 1, 4, 9, 0, -1, -4, 3, 0, -1, -6, -3, 0, 3, 2, 1),
)

AACS_ROW = (192,) + (0,) * 23

ACCF_ROWS = (
    (0, 1, 0, -7, 0, 5, 0, 5, 0, 1, -2, -1, 0, -1, 0, -1, 2, 5, 0, 1, 0, 1, 0, 1, 0, 1),
    (0, -1, 4, 3, 0, -9, -4, 3, 0, 1, -2, 3, 0, 3, 2, -3, 0, -1, 0, -1, 0, -1, 0, -1),
    (0, 5, -4, 1, 0, 13, 4, 1, 0, -3, 2, -1, 0, -9, -2, 1, 0, 1, 0, 1, 0, 1, 0, 1),
    (0, 1, -4, -3, 0, 9, 4, -3, 0, 1, 2, -1, 0, 7, -2, -3, 0, -1, 0, -1, 0, -1, 0, -1),
    (0, 3, 0, -5, 0, 15, 0, -1, 0, 1, -2, -1, 0, 7, 2, -3, 0, -1, 0, -1, 0, -1, 0, -1),
    (0, 1, 4, 5, 0, 1, -4, -3, 0, -3, -2, -1, 0, -9, 2, 1, 0, 1, 0, 1, 0, 1, 0, 1),
    (0, 3, -4, -1, 0, 3, 4, 7, 0, 1, 2, 3, 0, 3, -2, -3, 0, -1, 0, -1, 0, -1, 0, -1),
    (0, -1, -4, -5, 0, -1, 4, 3, 0, 1, 2, -1, 0, -1, -2, 5, 0, 1, 0, 1, 0, 1, 0, 1),
)

ACCS_ROW = (0, 12, -8, -12, 0, 36, 8, 12) + (0,) * 16
