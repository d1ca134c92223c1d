"""
How far can a single moment move?
=================================

Feasible shifts of one entry form an interval at each Hankel order, and the
intervals shrink as the order grows.
"""

from momentrigidity import MomentSequence, corpus_get, perturb_interval, rigidity_report

h = MomentSequence((1, 0, 1, 0, 3))
for N in (2, 3):
    iv = perturb_interval(h, 2, N)
    print("order", N, iv.to_dict())

# %%
# Raising c_0 is always allowed.
for name in ("gaussian", "heavy_tail", "two_atom"):
    print(name, perturb_interval(corpus_get(name), 0, 3).hi)

# %%
# Classification summaries.
for name in ("two_atom", "heavy_tail", "gaussian", "boundary_prepend"):
    print(name, rigidity_report(corpus_get(name), 2, K=12, order=0).to_dict())
