"""H^2(GL_4(F_2); F_2) is nonzero: compute the three symmetric parabolics live."""

import time

from glcohom.cohom import compute_cohomology
from glcohom.grpcore import close_generators
from glcohom.parabolic import parabolic_generators, parabolic_label
from glcohom.webb import parity_sum, report_render


def live(lam):
    t0 = time.perf_counter()
    t = close_generators(parabolic_generators(lam), label=parabolic_label(lam))
    res = compute_cohomology(t, 2)
    print(f"{t.label}: order {t.order}, dim H^2 = {res.dim}, ranks {res.resolution_ranks}, "
          f"{res.method}, {time.perf_counter() - t0:.1f}s")
    return res.dim, "computed"


report = parity_sum(4, 2, live)
print()
print(report_render(report))
