"""
Prepending entries to an indeterminate sequence
===============================================

Inside the parabola ``c_{-2} >= A c_{-1}**2 + 2 B c_{-1} + C`` the longer
sequence stays indeterminate; on it the truncation cannot decide.
"""

from momentrigidity import (corpus_get, extend_indeterminate, indeterminacy_diag, max_order, prepend,
                            prepend_region, psd_prefix)

h = corpus_get("heavy_tail")
region = prepend_region(h, 12)
print("vertex", float(region.vertex_c1), float(region.vertex_c2), "rho(0) ~", float(region.rho0))

# %%
# One unit above the vertex is interior; the vertex itself is only a truncated boundary.
out, placement = prepend(h, region.vertex_c1, region.vertex_c2 + 1, 12)
print(placement.value, psd_prefix(out, max_order(out)).status.value, indeterminacy_diag(out, 12).status.value)
print(prepend(h, region.vertex_c1, region.vertex_c2, 12)[1].value)

# %%
# Two iterated steps: the second bound depends on the first choice.
ext, steps = extend_indeterminate(h, 2, [0, 0], [1, 1], 12, full_output=True)
for s in steps:
    print("step", s.step, "bound", float(s.bound))
