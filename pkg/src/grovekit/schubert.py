"""
Permutations, Schubert polynomials and Grothendieck polynomials.

Both families are computed from the staircase ``x1^(n-1) x2^(n-2) ... x_{n-1}``
for the longest element of S_n by applying divided differences (resp.
isobaric divided differences) along a reduced word of ``w^-1 w0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itperms

from .operators import compose_perm, partial, pi
from .ring import ONE, BetaPolynomial, constant_term, x

__all__ = [
    "Permutation", "longest_element", "simple_reflection", "reduced_word",
    "permutations", "schubert", "grothendieck", "check_extractor_duality",
    "parse_permutation",
]


@dataclass(frozen=True)
class Permutation:
    """Finite-support permutation of 1, 2, ... in one-line notation."""
    one_line: tuple[int, ...] = ()

    def __post_init__(self):
        w = tuple(self.one_line)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
        while w and w[-1] == len(w):
            w = w[:-1]
        object.__setattr__(self, "one_line", w)

    def __call__(self, j: int) -> int:
        return self.one_line[j - 1] if j <= len(self.one_line) else j

    def __len__(self):
        """Smallest ``m`` with the permutation in S_m (0 for the identity)."""
        return len(self.one_line)

    def padded(self, n: int) -> tuple[int, ...]:
        return tuple(self(j) for j in range(1, max(n, len(self)) + 1))

    def length(self) -> int:
        w = self.one_line
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def descents(self) -> set[int]:
        w = self.one_line
        return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}

    def inverse(self) -> "Permutation":
        w = self.one_line
        inv = [0] * len(w)
        for pos, val in enumerate(w, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        n = max(len(self), len(other))
        return Permutation(tuple(self(other(j)) for j in range(1, n + 1)))

    def times_s(self, i: int) -> "Permutation":
        """``w s_i``: swap the entries in positions i and i+1."""
        w = list(self.padded(i + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def is_identity(self) -> bool:
        return not self.one_line

    def __str__(self):
        return ",".join(map(str, self.one_line)) if self.one_line else "1"

    def __repr__(self):
        return f"Permutation({self})"


IDENTITY = Permutation()


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Permutation(tuple(range(n, 0, -1)))


def simple_reflection(i: int) -> Permutation:
    return IDENTITY.times_s(i)


def reduced_word(w: Permutation) -> list[int]:
    """Reduced word ``[i1, ..., ik]`` with ``w = s_i1 ... s_ik``.

    Built by repeatedly right-multiplying by the smallest descent.
    """
    picks = []
    while not w.is_identity():
        i = min(w.descents())
        picks.append(i)
        w = w.times_s(i)
    picks.reverse()
    return picks


def permutations(n: int) -> list[Permutation]:
    """S_n, sorted by length then one-line notation."""
    perms = [Permutation(p) for p in _itperms(range(1, n + 1))]
    return sorted(perms, key=lambda w: (w.length(), w.padded(n)))


def _staircase(n: int) -> BetaPolynomial:
    f = ONE
    for i in range(1, n):
        f = f * x(i) ** (n - i)
    return f


def _ambient(w: Permutation, n: int | None) -> int:
    m = max(len(w), 1)
    if n is None:
        return m
    if n < m:
        raise ValueError(f"{w} is not in S_{n}")
    return n


@lru_cache(maxsize=None)
def _descend(one_line: tuple[int, ...], n: int, kind: str) -> BetaPolynomial:
    w = Permutation(one_line)
    w0 = longest_element(n)
    op = partial if kind == "schubert" else pi
    f = _staircase(n)
    # w = w0 s_j1 ... s_jk  =>  poly(w) = op_jk ... op_j1 (staircase)
    for j in reduced_word(w0.inverse() * w):
        f = op(f, j)
    return f


def schubert(w: Permutation, n: int | None = None) -> BetaPolynomial:
    """The Schubert polynomial of ``w``, computed inside S_n (default: smallest n)."""
    return _descend(w.one_line, _ambient(w, n), "schubert")


def grothendieck(w: Permutation, n: int | None = None) -> BetaPolynomial:
    """The Grothendieck polynomial of ``w`` with formal parameter b."""
    return _descend(w.one_line, _ambient(w, n), "grothendieck")


@dataclass
class DualityReport:
    n: int
    perms: list[Permutation]
    schubert_matrix: list[list]
    grothendieck_matrix: list[list]
    failures: list[tuple[str, Permutation, Permutation, str]]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_extractor_duality(n: int) -> DualityReport:
    """``ct D_v S_w`` and ``ct PH_v G_w`` against the Kronecker delta over S_n."""
    perms = permutations(n)
    sm, gm, failures = [], [], []
    for v in perms:
        dv, pv = compose_perm("Partial", v), compose_perm("PiHat", v)
        srow, grow = [], []
        for w in perms:
            expect = 1 if v == w else 0
            s = constant_term(dv(schubert(w, n)))
            g = constant_term(pv(grothendieck(w, n)))
            srow.append(s)
            grow.append(g)
            if s != expect:
                failures.append(("schubert", v, w, str(s)))
            if g != expect:
                failures.append(("grothendieck", v, w, str(g)))
        sm.append(srow)
        gm.append(grow)
    return DualityReport(n, perms, sm, gm, failures)


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if text.startswith("{"):
        return Permutation(tuple(json.loads(text)["oneline"]))
    if text in ("", "1", "e", "id"):
        return IDENTITY
    return Permutation(tuple(int(t) for t in text.replace(" ", "").split(",")))
