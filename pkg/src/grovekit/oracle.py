"""
Exact linear algebra cross-checks for grove expansions.

Independent of the peeling algorithm: the candidate forests come from a
structural bound, and the coefficients from solving the linear system over Q
in the monomial basis.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .bases import grove_polynomial
from .forest import IndexedForest, forests_up_to
from .ring import BetaPolynomial, specialize_beta

__all__ = ["candidate_forests", "grove_matrix", "grove_matrix_rank", "solve_grove_coefficients"]


def _non_right_nodes(F: IndexedForest) -> int:
    return sum(1 for v in F.nodes() if not v.is_right_child)


def candidate_forests(degree: int, n: int) -> list[IndexedForest]:
    """Forests that can carry a nonzero grove coefficient of a degree-``degree``
    polynomial in ``x1..xn``.

    Each extractor letter on a root or left child lowers degree, so at most
    ``degree`` such nodes occur; ``rho`` strictly increases along right edges
    and stays ``<= n``, so each right chain has at most ``n`` nodes.
    """
    return [F for F in forests_up_to(max(degree, 0) * n, n) if _non_right_nodes(F) <= degree]


def grove_matrix(forests: list[IndexedForest], beta: int) -> tuple[list, list[list[int]]]:
    """Monomial-by-forest integer matrix of the ``b = beta`` grove polynomials."""
    polys = [grove_polynomial(F, beta).terms() for F in forests]
    monos = sorted({m for p in polys for m in p}, key=lambda m: (sum(m), m))
    rows = [[int(p.get(m, 0)) for p in polys] for m in monos]
    return monos, rows


def grove_matrix_rank(forests: list[IndexedForest], beta: int) -> int:
    _, rows = grove_matrix(forests, beta)
    if not rows:
        return 0
    return DomainMatrix([[QQ(v) for v in r] for r in rows], (len(rows), len(forests)), QQ).rank()


def solve_grove_coefficients(f: BetaPolynomial, n: int, beta: int = 1) -> dict[IndexedForest, Fraction]:
    """Solve ``f = sum c_F G_F`` exactly over Q at ``b = beta``.

    Raises ``ValueError`` if the system is inconsistent or underdetermined.
    """
    f = specialize_beta(f, beta)
    degree = max(f.degree(), 0)
    forests = candidate_forests(degree, n)
    monos, rows = grove_matrix(forests, beta)
    rhs = f.terms()
    extra = set(rhs) - set(monos)
    if extra:
        raise ValueError(f"monomials {sorted(extra)} lie outside the span of the candidates")
    ncols = len(forests)
    aug = [[QQ(v) for v in r] + [QQ(int(rhs.get(m, 0)))] for m, r in zip(monos, rows)]
    rref, pivots = DomainMatrix(aug, (len(aug), ncols + 1), QQ).rref()
    if ncols in pivots:
        raise ValueError("inconsistent system")
    if len(pivots) != ncols:
        raise ValueError("grove polynomials are not independent on the candidates")
    dense = rref.to_Matrix()
    out = {}
    for row, col in enumerate(pivots):
        val = dense[row, ncols]
        if val != 0:
            out[forests[col]] = Fraction(int(val.p), int(val.q))
    return out
