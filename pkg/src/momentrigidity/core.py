"""
Numeric tower and the moment-sequence data model.

Moments are exact rationals (:class:`fractions.Fraction`).  Floating values
(:data:`Real`) are mpmath numbers and only appear in convergence heuristics
and in quantities carrying square roots.
"""

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Tuple, Union

import mpmath
from mpmath import libmp

from .errors import DomainError, KindError, NotSymmetricError, ShapeError

Rat = Fraction
Real = mpmath.mpf

DEFAULT_PRECISION = 256

RatLike = Union[Fraction, int, str]


def as_rat(value) -> Fraction:
    """Convert ``value`` to an exact rational.

    Integers, :class:`~fractions.Fraction` and strings such as ``"3"`` or
    ``"-7/12"`` are accepted.  Floats are refused: they would silently smuggle
    binary rounding into the exact pipeline.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not moments")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as exc:
            raise DomainError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rat_str(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"`` or ``"p"``."""
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def to_real(x, prec: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Correctly rounded conversion of a rational to an mpmath float of ``prec`` bits."""
    if prec <= 0:
        raise DomainError("precision must be a positive number of bits")
    x = as_rat(x)
    raw = libmp.from_rational(x.numerator, x.denominator, prec, libmp.round_nearest)
    with mpmath.workprec(prec):
        return mpmath.mpf(raw)


class Kind(enum.Enum):
    HAMBURGER = "hamburger"
    STIELTJES = "stieltjes"


@dataclass(frozen=True)
class MomentSequence:
    """A finite prefix ``(c_0, ..., c_{L-1})`` of a moment sequence.

    Parameters
    ----------
    entries : iterable
        Exact rationals (ints, Fractions or ``"p/q"`` strings).
    kind : Kind
        Declared kind.  This is a label, not a verified property; use
        :func:`momentrigidity.hankel.psd_prefix` or
        :func:`momentrigidity.hankel.stieltjes_prefix_check` to verify it.
    name : str, optional
        Free-form label.
    """

    entries: Tuple[Fraction, ...]
    kind: Kind = Kind.HAMBURGER
    name: Optional[str] = None

    def __post_init__(self):
        entries = tuple(as_rat(v) for v in self.entries)
        if not entries:
            raise DomainError("a moment sequence needs at least one entry")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "kind", Kind(self.kind))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def with_entries(self, entries, name=None, kind=None):
        return MomentSequence(
            tuple(entries),
            self.kind if kind is None else kind,
            self.name if name is None else name,
        )

    # JSON file format: {"name": str?, "kind": ..., "moments": [str, ...]}
    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "moments": [rat_str(v) for v in self.entries]}
        if self.name is not None:
            out["name"] = self.name
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "MomentSequence":
        if not isinstance(data, dict) or "moments" not in data:
            raise DomainError("sequence document needs a 'moments' list")
        moments = data["moments"]
        if not isinstance(moments, list):
            raise DomainError("'moments' must be a list")
        values = []
        for m in moments:
            if isinstance(m, float):
                raise DomainError(f"moment {m!r} is a float; write it as a string 'p/q'")
            values.append(as_rat(m))
        try:
            kind = Kind(data.get("kind", "hamburger"))
        except ValueError as exc:
            raise KindError(f"unknown kind {data.get('kind')!r}") from exc
        return cls(tuple(values), kind, data.get("name"))

    def dumps(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def loads(cls, text: str) -> "MomentSequence":
        return cls.from_dict(json.loads(text))


def load_sequence(path) -> MomentSequence:
    with open(path, encoding="utf-8") as fh:
        return MomentSequence.loads(fh.read())


def save_sequence(seq: MomentSequence, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(seq.dumps(indent=2))
        fh.write("\n")


@dataclass(frozen=True)
class AtomicMeasure:
    """A finite positive measure ``sum_j w_j delta(x - x_j)``.

    ``atoms`` is a sequence of ``(position, weight)`` pairs with strictly
    positive weights and pairwise distinct positions.  Set ``stieltjes=True``
    to additionally require all positions to be nonnegative.
    """

    atoms: Tuple[Tuple[Fraction, Fraction], ...]
    stieltjes: bool = False

    def __post_init__(self):
        atoms = tuple((as_rat(x), as_rat(w)) for x, w in self.atoms)
        positions = [x for x, _ in atoms]
        if len(set(positions)) != len(positions):
            raise DomainError("atom positions must be pairwise distinct")
        if any(w <= 0 for _, w in atoms):
            raise DomainError("atom weights must be strictly positive")
        if self.stieltjes and any(x < 0 for x in positions):
            raise DomainError("a Stieltjes measure lives on [0, inf)")
        object.__setattr__(self, "atoms", atoms)

    def __len__(self):
        return len(self.atoms)


def trim(h: MomentSequence, j: int) -> MomentSequence:
    """Drop the first ``j`` entries: ``(c_j, c_{j+1}, ...)``."""
    if j < 0 or j >= len(h):
        raise DomainError(f"cannot trim {j} entries from a sequence of length {len(h)}")
    if j == 0:
        return h
    name = f"{h.name}[{j}:]" if h.name else None
    return MomentSequence(h.entries[j:], h.kind, name)


def symmetrize(s: MomentSequence) -> MomentSequence:
    """Stieltjes ``(s_0, s_1, ...)`` -> symmetric Hamburger ``(s_0, 0, s_1, 0, ...)``."""
    if s.kind is not Kind.STIELTJES:
        raise KindError("symmetrize expects a Stieltjes sequence")
    out = []
    for v in s.entries:
        out.extend((v, Fraction(0)))
    out.pop()
    name = f"sym({s.name})" if s.name else None
    return MomentSequence(tuple(out), Kind.HAMBURGER, name)


def desymmetrize(h: MomentSequence) -> MomentSequence:
    """Inverse of :func:`symmetrize`; every odd-indexed entry must be zero."""
    odd = h.entries[1::2]
    if any(v != 0 for v in odd):
        raise NotSymmetricError("sequence has a nonzero odd moment")
    name = h.name
    if name and name.startswith("sym(") and name.endswith(")"):
        name = name[4:-1]
    return MomentSequence(h.entries[0::2], Kind.STIELTJES, name)


def convex_combine(h: MomentSequence, t: MomentSequence, eta) -> MomentSequence:
    """Entrywise ``eta*h + (1 - eta)*t`` for ``0 < eta < 1``."""
    eta = as_rat(eta)
    if not 0 < eta < 1:
        raise DomainError("eta must lie strictly between 0 and 1")
    if len(h) != len(t) or h.kind is not t.kind:
        raise ShapeError("convex combination needs equal lengths and kinds")
    entries = tuple(eta * a + (1 - eta) * b for a, b in zip(h.entries, t.entries))
    return MomentSequence(entries, h.kind)


def perturb_entry(h: MomentSequence, m: int, gamma) -> MomentSequence:
    """Copy of ``h`` with ``c_m`` replaced by ``c_m + gamma``."""
    if not 0 <= m < len(h):
        raise DomainError(f"index {m} out of range for length {len(h)}")
    gamma = as_rat(gamma)
    entries = list(h.entries)
    entries[m] += gamma
    return MomentSequence(tuple(entries), h.kind, h.name)


def moments_from_atoms(mu: AtomicMeasure, L: int) -> MomentSequence:
    """Exact moments ``c_i = sum_j w_j x_j**i`` for ``i < L``.

    The result is tagged Stieltjes when all atoms are nonnegative.
    """
    if not mu.atoms:
        raise DomainError("empty atomic measure")
    if L < 1:
        raise DomainError("length must be at least 1")
    entries = []
    powers = [Fraction(1)] * len(mu.atoms)
    for _ in range(L):
        entries.append(sum(w * p for (_, w), p in zip(mu.atoms, powers)))
        powers = [p * x for (x, _), p in zip(mu.atoms, powers)]
    kind = Kind.STIELTJES if all(x >= 0 for x, _ in mu.atoms) else Kind.HAMBURGER
    return MomentSequence(tuple(entries), kind)


def entries_of(e) -> Tuple[Fraction, ...]:
    """Accept a :class:`MomentSequence` or any iterable of rationals."""
    if isinstance(e, MomentSequence):
        return e.entries
    return tuple(as_rat(v) for v in e)
