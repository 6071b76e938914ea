"""Check the symmetrization identity and admissible-space splits over a range."""

import time

from oddzeta.symcheck import lemma_suite, verify_lemma_sym

t0 = time.perf_counter()
bad_k = [k for k in range(2, 41) if not verify_lemma_sym(k)]
print(f"symmetrization identity, K=2..40: failures={bad_k}  {time.perf_counter() - t0:.1f}s")
for n in range(5, 82, 2):
    r = lemma_suite(n)
    print(f"N={n:>3}  dim C={r.admissible_dim:>2}  ok={r.ok}")
