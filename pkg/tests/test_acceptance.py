"""Exit criteria, one test per criterion, at the stated tolerances.

Full ranges: odd N in [5, 101], even h in [4, 102], K in [2, 40], N <= 81
for the admissible-space checks.  Everything except criterion 6/7 is exact.
"""

import math
import random
import time
from fractions import Fraction
from math import comb

import mpmath

from oddzeta.depthmap import dmatrix
from oddzeta.numzeta import (
    DPS,
    REL_DENOMINATOR_CAP,
    resolve_decomposition_convention,
    verify_relation_numeric,
    zeta_double,
    zeta_single,
)
from oddzeta.periodspace import contains, dim_cusp_forms, kernel_dim, w_basis
from oddzeta.qpoly import QPoly
from oddzeta.ratcore import rank
from oddzeta.relspace import RelationVec, relations, verify_exactness
from oddzeta.symcheck import (
    admissible_space,
    antisymmetrize_q,
    newton_expansion,
    newton_reconstruct,
    split_identity_holds,
    symmetrize_p,
    verify_lemma_sym,
    x_coeff,
    x_coeffs_match_differences,
)

ODD_WEIGHTS = range(5, 102, 2)


def test_c1_rank_law(criterion):
    t0 = time.perf_counter()
    bad = [
        n
        for n in ODD_WEIGHTS
        if rank(dmatrix(n)) != (n - 3) // 2 - dim_cusp_forms(n - 1) - dim_cusp_forms(n + 1)
    ]
    elapsed = time.perf_counter() - t0
    criterion(not bad and elapsed < 120, f"failures={bad} time={elapsed:.1f}s")


def test_c2_exactness_suite(criterion):
    failures = []
    for n in ODD_WEIGHTS:
        rep = verify_exactness(n)
        full = (
            rep.ok
            and rep.rank_j == rep.dim_w_plus + rep.dim_w_minus
            and rep.rank_d + rep.rank_j == (n - 3) // 2
            and rep.n_relations == rep.dim_w_plus + rep.dim_w_minus
        )
        if not full:
            failures.append(n)
    criterion(not failures, f"weights=5..101 failures={failures}")


def test_c3_period_space_dimensions(criterion):
    bad = []
    for h in range(4, 103, 2):
        d = dim_cusp_forms(h)
        if not (w_basis(h, "+").dim == w_basis(h, "-").dim == d and kernel_dim(h, "full") == 2 * d + 1):
            bad.append(h)
    (p,) = w_basis(12, "+").basis
    delta = [int(p.coeff(k)) for k in (9, 7, 5, 3, 1)]
    ok = not bad and delta in ([4, -25, 42, -25, 4], [-4, 25, -42, 25, -4])
    criterion(ok, f"failures={bad} h12={delta}")


def test_c4_lemma_suite(criterion):
    problems = []
    for k in range(2, 41):
        if not verify_lemma_sym(k):
            problems.append(f"symmetrization identity K={k}")
    rng = random.Random(20261015)
    for trial in range(200):
        deg = trial % 13
        f = QPoly([Fraction(rng.randint(-99, 99), rng.randint(1, 30)) for _ in range(deg + 1)])
        if newton_reconstruct(newton_expansion(f, 12)) != f:
            problems.append(f"newton deg={deg}")
    for i in range(1, 13):
        k = i + 2
        if any(x_coeff(p, i, k) for p in range(2 * i + 2, 2 * k + 1)):
            problems.append(f"x_p vanishing i={i}")
        if not x_coeffs_match_differences(i, k):
            problems.append(f"x_p differences i={i}")
    for n in range(5, 82, 2):
        space = admissible_space(n)
        if len(space) != w_basis(n - 1, "+").dim + w_basis(n + 1, "-").dim:
            problems.append(f"admissible dim N={n}")
        for c in space:
            if not contains(symmetrize_p(c), n - 1, "+"):
                problems.append(f"p not in W+ N={n}")
            if not contains(antisymmetrize_q(c), n + 1, "-"):
                problems.append(f"q not in W- N={n}")
            if not split_identity_holds(c):
                problems.append(f"split identity N={n}")
    criterion(not problems, f"problems={problems[:5]}")


def test_c5_fixed_small_matrices(criterion):
    def transcribe(n):
        k = (n - 1) // 2
        c = lambda a, b: comb(a, b) if 0 <= b <= a else 0  # noqa: E731
        return [
            [int(m1 == m) - c(2 * m1, 2 * m) - c(2 * m1, 2 * (k - m) - 1) for m1 in range(1, k)]
            for m in range(1, k)
        ]

    golden = {5: [[-2]], 7: [[0, -10], [-2, -4]], 9: [[0, -6, -21], [0, -4, -35], [-2, -4, -6]]}
    ranks = {5: 1, 7: 2, 9: 3}
    ok = all(
        transcribe(n) == golden[n] and dmatrix(n).tolist() == golden[n] and rank(dmatrix(n)) == ranks[n]
        for n in golden
    )
    criterion(ok, "dmatrix(5,7,9) golden and ranks 1,2,3")


def test_c6_numeric_certificates(criterion):
    eps = 1e-8
    problems = []
    for n in (11, 13, 15, 17):
        for rel in relations(n):
            cert = verify_relation_numeric(n, rel, eps)
            if not (cert.passed and cert.rational.denominator <= REL_DENOMINATOR_CAP):
                problems.append(f"relation N={n}")
            bad = RelationVec(n, (rel.coeffs[0] + 1,) + rel.coeffs[1:])
            if verify_relation_numeric(n, bad, eps).passed:
                problems.append(f"negative control passed N={n}")
    if abs(zeta_double(1, 2, 1e-8).value - zeta_single(3, 1e-8).value) > 2e-8:
        problems.append("zeta(1,2) != zeta(3)")
    z2, z3 = zeta_single(2), zeta_single(3)
    z23, z32, z5 = zeta_double(2, 3), zeta_double(3, 2), zeta_single(5)
    bound = 2 * z2.error_bound + 2 * z3.error_bound + z23.error_bound + z32.error_bound + z5.error_bound
    with mpmath.workdps(DPS):
        if abs(z2.value * z3.value - z23.value - z32.value - z5.value) > bound + 1e-30:
            problems.append("stuffle (2,3)")
    if abs(float(zeta_single(2, 1e-12)) - math.pi**2 / 6) > 1e-12:
        problems.append("zeta(2)")
    criterion(not problems, f"problems={problems}")


def test_c7_convention_resolver(criterion):
    reports = {n: resolve_decomposition_convention(n, tol=1e-6) for n in (5, 7, 9)}
    readings = {n: r.matching for n, r in reports.items()}
    ok = all(len(m) == 1 for m in readings.values())
    ok = ok and len(set(readings.values())) == 1
    ok = ok and all(r.product_terms_match for r in reports.values())
    criterion(ok, f"readings={readings}")
