"""Compare readings of the zeta(N) coefficient in the depth-two decomposition."""

from oddzeta.numzeta import CANDIDATES, resolve_decomposition_convention

for n in (5, 7, 9):
    rep = resolve_decomposition_convention(n)
    print(f"N={n}  matching={rep.matching}  product_terms_match={rep.product_terms_match}")
    for row in rep.rows:
        res = "  ".join(f"{c}={row.residuals[c]:.2e}" for c in CANDIDATES)
        print(
            f"  ({row.m},{row.n})  printed={row.printed_zetaN_coeff}  "
            f"empirical={row.empirical_zetaN_coeff}  {res}"
        )
