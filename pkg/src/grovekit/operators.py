"""
Operators on Z[b][x1, x2, ...].

Letters (CLI notation in brackets):

* ``Partial`` [D]: divided difference ``(f - s_i f) / (x_i - x_{i+1})``
* ``Pi`` [P]: isobaric divided difference ``D_i((1 + b x_{i+1}) f)``
* ``PiHat`` [PH]: ``b f + P_i f``
* ``R`` [R]: ``f(x1, ..., x_{i-1}, 0, x_i, ...)``
* ``T`` [T]: ``(R_{i+1} f - R_i f) / x_i``
* ``TK`` [TK]: ``T_i((1 + b x_{i+1}) f)``
* ``TL`` [TL]: ``T_i f``
* ``TR`` [TR]: ``(1 + b x_i) T_i f``

An :class:`Operator` is a word of letters; as in written products the
rightmost letter acts first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .forest import IndexedForest, extractor_word, to_word
from .ring import (
    BETA, ONE, BetaPolynomial, exact_divide_by_difference, exact_divide_by_var,
    substitute_zero_and_shift, swap_variables, x,
)

__all__ = [
    "OperatorLetter", "Operator", "TAGS", "apply", "partial", "pi", "pi_hat",
    "bs_op", "t_op", "tk_op", "tl_op", "tr_op", "compose_perm",
    "compose_forest_T", "compose_extractor", "parse_operator",
]

TAGS = ("Partial", "Pi", "PiHat", "R", "T", "TK", "TL", "TR")
_SHORT = {"Partial": "D", "Pi": "P", "PiHat": "PH", "R": "R", "T": "T",
          "TK": "TK", "TL": "TL", "TR": "TR"}
_FROM_SHORT = {v: k for k, v in _SHORT.items()}


def partial(f: BetaPolynomial, i: int) -> BetaPolynomial:
    return exact_divide_by_difference(f - swap_variables(f, i), i)


def pi(f: BetaPolynomial, i: int) -> BetaPolynomial:
    return partial((ONE + BETA * x(i + 1)) * f, i)


def pi_hat(f: BetaPolynomial, i: int) -> BetaPolynomial:
    return BETA * f + pi(f, i)


def bs_op(f: BetaPolynomial, i: int) -> BetaPolynomial:
    return substitute_zero_and_shift(f, i)


def t_op(f: BetaPolynomial, i: int) -> BetaPolynomial:
    return exact_divide_by_var(bs_op(f, i + 1) - bs_op(f, i), i)


def tk_op(f: BetaPolynomial, i: int) -> BetaPolynomial:
    return t_op((ONE + BETA * x(i + 1)) * f, i)


def tl_op(f: BetaPolynomial, i: int) -> BetaPolynomial:
    return t_op(f, i)


def tr_op(f: BetaPolynomial, i: int) -> BetaPolynomial:
    return (ONE + BETA * x(i)) * t_op(f, i)


_IMPL = {"Partial": partial, "Pi": pi, "PiHat": pi_hat, "R": bs_op, "T": t_op,
         "TK": tk_op, "TL": tl_op, "TR": tr_op}


@dataclass(frozen=True)
class OperatorLetter:
    tag: str
    position: int

    def __post_init__(self):
        if self.tag not in _IMPL:
            raise ValueError(f"unknown operator tag {self.tag!r}")
        if self.position < 1:
            raise ValueError(f"operator position must be >= 1, got {self.position}")

    def __call__(self, f: BetaPolynomial) -> BetaPolynomial:
        return _IMPL[self.tag](f, self.position)

    def __str__(self):
        return f"{_SHORT[self.tag]}{self.position}"


def apply(letter: OperatorLetter, f: BetaPolynomial) -> BetaPolynomial:
    return letter(f)


@dataclass(frozen=True)
class Operator:
    """A composite of letters; ``letters[-1]`` acts first."""
    letters: tuple[OperatorLetter, ...] = ()

    def __call__(self, f: BetaPolynomial) -> BetaPolynomial:
        for letter in reversed(self.letters):
            if not f:
                break
            f = letter(f)
        return f

    def steps(self, f: BetaPolynomial) -> list[BetaPolynomial]:
        """``f`` followed by the image after each letter, in application order."""
        out = [f]
        for letter in reversed(self.letters):
            f = letter(f)
            out.append(f)
        return out

    def __matmul__(self, other: "Operator") -> "Operator":
        # (A @ B)(f) = A(B(f))
        return Operator(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "id"


def word_operator(tag: str, word: Iterable[int]) -> Operator:
    return Operator(tuple(OperatorLetter(tag, i) for i in word))


def compose_perm(tag: str, w) -> Operator:
    """``D_w``, ``P_w`` or ``PH_w`` along the canonical reduced word of ``w``."""
    if tag not in ("Partial", "Pi", "PiHat"):
        raise ValueError(f"permutation composites need Partial, Pi or PiHat, not {tag!r}")
    from .schubert import reduced_word
    return word_operator(tag, reduced_word(w))


def compose_forest_T(F: IndexedForest, word: Sequence[int] | None = None) -> Operator:
    """``T_F`` along a trimming word of ``F`` (canonical by default)."""
    return word_operator("T", to_word(F) if word is None else word)


def compose_extractor(letters: Sequence[tuple[int, str]] | IndexedForest) -> Operator:
    """Grove extractor from ``(i, "L"|"R")`` letters, or directly from a forest."""
    if isinstance(letters, IndexedForest):
        letters = extractor_word(letters)
    return Operator(tuple(OperatorLetter("T" + kind, i) for i, kind in letters))


_LETTER = re.compile(r"(PH|TK|TL|TR|D|P|R|T)(\d+)$")


def parse_operator(text: str) -> Operator:
    """Parse e.g. ``"TL2 TR3 TL2"``; ``"id"`` or empty text is the identity."""
    letters = []
    for tok in text.split():
        if tok == "id":
            continue
        m = _LETTER.match(tok)
        if not m:
            raise ValueError(f"bad operator letter {tok!r}")
        letters.append(OperatorLetter(_FROM_SHORT[m.group(1)], int(m.group(2))))
    return Operator(tuple(letters))
