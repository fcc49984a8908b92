# The operator U picks every p-th q-coefficient.  On the cuspidal weight-0
# space it acts on the basis d_p, d_p^2, ... by an integer matrix M.  This
# script builds M twice -- by brute force on q-expansions and from the
# recurrence that I_p induces -- and inspects the p-adic structure that makes
# the whole theory run.

from upadic.umatrix import (build_matrix_oracle, build_matrix_genfun,
                            entry_bound_violations, scaled_matrix_p3, dk_factor,
                            scaled_row_bound_report)
from upadic.scalars import val_quad3, vp_int
from upadic.modcurve import e_exponent

# Route one: expand U(d_p^j) as a q-series and re-express it in powers of
# d_p.  Each column terminates at degree p*j; the solver checks the residual
# vanishes on a guard band, so the expansion is certified, not assumed.
m = build_matrix_oracle(3, 8)
print("U(d_3) =", " + ".join("%d d^%d" % (m.entry(i, 1), i)
                             for i in range(1, 4) if m.entry(i, 1)))

# Route two: columns satisfy the linear recurrence that I_3 induces.
g = build_matrix_genfun(3, 8)
print("oracle == genfun:", m.rows == g.rows)

# Every entry obeys v_p(M_ij) >= e(pi - j) - 1.
print("entry-bound violations:", entry_bound_violations(m))
print("v_3(M_11) =", vp_int(m.entry(1, 1), 3),
      " bound =", e_exponent(3) * (3 - 1) - 1)

# For p=3 the natural rescaling 3^((3/2)(j-i)) M_ij lands in Z[sqrt(3)].
# Row i is divisible by 3^(3i-1), and that exponent is attained in every row:
mp = scaled_matrix_p3(build_matrix_genfun(3, 12))
for row in scaled_row_bound_report(mp)[:4]:
    print("row %d: min valuation %s, attains 3i-1: %s"
          % (row["row"], row["min_valuation"], row["attains_3i_minus_1"]))

# Factoring the row divisibility out, M' = diag(3^(3i-1)) * K, and K mod
# sqrt(3) is a matrix over F_3 whose first row is concentrated in column 1.
dk = dk_factor(mp)
print("Kbar row 1:", dk.Kbar[0])
print("Kbar row 2:", dk.Kbar[1])
print("Kbar row 3:", dk.Kbar[2])
