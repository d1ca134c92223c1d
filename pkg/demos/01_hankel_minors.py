"""
Hankel minors of a few classical moment sequences
=================================================

Exact minors, the positivity test, and the recurrence coefficients that
the minors encode.
"""

from momentrigidity import corpus_get, minor, psd_prefix, recurrence_from_moments

# %%
# Catalan numbers: the plain minors are all 1, the once-shifted block
# starting at c_2 gives n + 1.
c = corpus_get("catalan", 22)
print("Delta_n^(0):", [str(minor(c, n, 0)) for n in range(1, 11)])
print("Delta_n^(1):", [str(minor(c, n, 1)) for n in range(1, 11)])

# %%
# The PSD test distinguishes definite, singular and infeasible prefixes.
for values in [(1, 0, 1), (2, 0, 2, 0, 2), (1, 2, 1)]:
    n = (len(values) + 1) // 2
    print(values, psd_prefix(values, n).to_dict())

# %%
# Recurrence coefficients: Gaussian (0, k), factorial (2k+1, k^2).
for name in ("gaussian", "factorial", "catalan"):
    rec = recurrence_from_moments(corpus_get(name, 13), 6)
    print(name, "alpha", [str(a) for a in rec.alpha], "beta", [str(b) for b in rec.beta])
