"""Evaluate every exact relation numerically and print the zeta(N) ratio."""

import sys

import mpmath

from oddzeta.numzeta import verify_relation_numeric
from oddzeta.relspace import relations

weights = [int(a) for a in sys.argv[1:]] or [11, 13, 15, 17]
for n in weights:
    for rel in relations(n):
        c = verify_relation_numeric(n, rel, 1e-8)
        print(
            f"N={n}  coeffs={tuple(int(x) for x in rel.coeffs)}  ratio={mpmath.nstr(c.ratio, 20)}  "
            f"rho={c.rational}  bound={c.ratio_error:.1e}  passed={c.passed}"
        )
