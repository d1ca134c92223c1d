"""Reference sequences with known analytic status, generated exactly."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List

from .core import Kind, MomentSequence
from .errors import DomainError

DEFAULT_LENGTH = 32


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: Kind
    analytic_status: str  # determinate | indeterminate | finite_support
    source_note: str
    generator: Callable[[int], List[Fraction]]

    def sequence(self, L: int = DEFAULT_LENGTH) -> MomentSequence:
        if L < 1:
            raise DomainError("length must be at least 1")
        return MomentSequence(tuple(self.generator(L)), self.kind, self.name)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind.value,
            "analytic_status": self.analytic_status,
            "source_note": self.source_note,
        }


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _gaussian(L):
    return [Fraction(_double_factorial(k - 1)) if k % 2 == 0 else Fraction(0) for k in range(L)]


def _factorial(L):
    return [Fraction(factorial(k)) for k in range(L)]


def _catalan(L):
    return [Fraction(comb(2 * k, k), k + 1) for k in range(L)]


def _heavy_tail(L):
    return [Fraction(4 * factorial(4 * k + 3)) for k in range(L)]


def _two_atom(L):
    return [Fraction(2) if k % 2 == 0 else Fraction(0) for k in range(L)]


def _dirac0(L):
    return [Fraction(1)] + [Fraction(0)] * (L - 1)


def boundary_K(L: int) -> int:
    """Truncation used by the ``boundary_prepend`` entry of length ``L``.

    The largest ``K`` the base allows, so the vertex condition involves every
    entry and the result is a PSD (singular) prefix at its full order.
    """
    return (L - 1) // 2


def _boundary_prepend(L):
    from .rigidity import prepend, prepend_region

    if L < 3:
        raise DomainError("boundary_prepend needs L >= 3")
    base = MomentSequence(tuple(_heavy_tail(L - 2)), Kind.STIELTJES, "heavy_tail")
    K = boundary_K(L)
    region = prepend_region(base, K)
    out, _ = prepend(base, region.vertex_c1, region.vertex_c2, K, region=region)
    return list(out.entries)


_ENTRIES: Dict[str, CorpusEntry] = {
    e.name: e
    for e in [
        CorpusEntry("gaussian", Kind.HAMBURGER, "determinate",
                    "standard normal: c_2k = (2k-1)!!, odd moments 0", _gaussian),
        CorpusEntry("factorial", Kind.STIELTJES, "determinate",
                    "exponential density on [0, inf): s_k = k!", _factorial),
        CorpusEntry("catalan", Kind.STIELTJES, "determinate",
                    "Marchenko-Pastur on [0, 4]: Catalan numbers", _catalan),
        CorpusEntry("heavy_tail", Kind.STIELTJES, "indeterminate",
                    "density exp(-x**(1/4)) on [0, inf): s_k = 4 (4k+3)!", _heavy_tail),
        CorpusEntry("two_atom", Kind.HAMBURGER, "finite_support",
                    "delta(x - 1) + delta(x + 1)", _two_atom),
        CorpusEntry("dirac0", Kind.STIELTJES, "finite_support",
                    "unit mass at the origin", _dirac0),
        CorpusEntry("boundary_prepend", Kind.HAMBURGER, "determinate",
                    "heavy_tail prepended at the truncated vertex; expected ind_0 = 0",
                    _boundary_prepend),
    ]
}


def list_corpus() -> List[CorpusEntry]:
    return [_ENTRIES[name] for name in sorted(_ENTRIES)]


def corpus_entry(name: str) -> CorpusEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise LookupError(f"unknown corpus entry {name!r}") from None


def corpus_get(name: str, L: int = DEFAULT_LENGTH) -> MomentSequence:
    """Exact prefix of length ``L`` of the named corpus sequence."""
    return corpus_entry(name).sequence(L)
