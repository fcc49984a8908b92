"""Published coefficient data for the bivariate polynomials I_p, used as
regression targets by the verification suites.

I_2, I_3, I_5 are complete.  For I_7 and I_13 only the y^1 row and the
trailing -x y^p term were published; IP7_Y1 carries two corrected entries
(x^2 and x^1), where the printed values contradict the entry valuation bound
v_p(M_ij) >= e(pi-j)-1 and all three computation routes agree on the
correction (see IP7_Y1_PRINTED_ERRATA).
"""

IP2 = {(0, 0): 1,
       (2, 1): -2 ** 12, (1, 1): -3 * 2 ** 4,
       (1, 2): -1}

IP3 = {(0, 0): 1,
       (3, 1): -3 ** 12, (2, 1): -4 * 3 ** 8, (1, 1): -10 * 3 ** 3,
       (2, 2): -3 ** 6, (1, 2): -4 * 3 ** 2,
       (1, 3): -1}

IP5 = {(0, 0): 1,
       (5, 1): -5 ** 12, (4, 1): -6 * 5 ** 10, (3, 1): -63 * 5 ** 7,
       (2, 1): -52 * 5 ** 5, (1, 1): -63 * 5 ** 2,
       (4, 2): -5 ** 9, (3, 2): -6 * 5 ** 7, (2, 2): -63 * 5 ** 4,
       (1, 2): -52 * 5 ** 2,
       (3, 3): -5 ** 6, (2, 3): -6 * 5 ** 4, (1, 3): -63 * 5,
       (2, 4): -5 ** 3, (1, 4): -6 * 5,
       (1, 5): -1}

# y^1 row of I_7; the x^2 and x^1 entries are the corrected values
IP7_Y1 = {7: -7 ** 12, 6: -4 * 7 ** 11, 5: -46 * 7 ** 9, 4: -272 * 7 ** 7,
          3: -845 * 7 ** 5, 2: -176 * 7 ** 4, 1: -82 * 7 ** 2}

# as printed; both fail v_7 >= e(p i - 1) - 1 and the direct U oracle
IP7_Y1_PRINTED_ERRATA = {2: -176 * 7 ** 2, 1: -82 * 7}

IP13_Y1 = {13: -13 ** 12, 12: -2 * 13 ** 12, 11: -25 * 13 ** 11,
           10: -196 * 13 ** 10, 9: -1064 * 13 ** 9, 8: -4180 * 13 ** 8,
           7: -12086 * 13 ** 7, 6: -25660 * 13 ** 6, 5: -39182 * 13 ** 5,
           4: -41140 * 13 ** 4, 3: -27272 * 13 ** 3, 2: -9604 * 13 ** 2,
           1: -1165 * 13}
