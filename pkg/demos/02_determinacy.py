"""
Reading determinacy off a finite prefix
=======================================

The sums of ``P_k(0)**2`` and ``Q_k(0)**2`` converge exactly for
indeterminate sequences.  From finitely many terms we only grade evidence.
"""

import mpmath

from momentrigidity import corpus_get, index_estimate, indeterminacy_diag, zero_data

# %%
# Term decay: heavy_tail decays like k**-2, Gaussian like k**-0.5.
for name in ("heavy_tail", "gaussian"):
    zd = zero_data(corpus_get(name, 33), 16)
    print(name, "P2 tail:", [mpmath.nstr(mpmath.mpf(t.numerator) / t.denominator, 4) for t in zd.P2[-4:]])

# %%
# Verdicts as the truncation grows.
for name in ("heavy_tail", "gaussian", "factorial", "two_atom"):
    h = corpus_get(name, 33)
    print(name, [indeterminacy_diag(h, K).status.value for K in (4, 8, 12, 16)])

# %%
# Index windows: Gaussian keeps showing determinate evidence after trimming.
g = corpus_get("gaussian", 40)
for nmax in range(4):
    print("nmax", nmax, "window", index_estimate(g, nmax, 12).to_list())
