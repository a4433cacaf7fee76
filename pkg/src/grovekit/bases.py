"""
Forest, grove and multi-fundamental polynomials, and expansions into them.

Grove polynomials are generated by summing over compatible set-valued
labelings.  The sum is organised bottom-up: for each internal node ``v`` we
tabulate ``W_v(m)``, the generating polynomial of labelings of the subtree at
``v`` whose label at ``v`` has minimum at least ``m``.  A label set with
minimum ``a`` and maximum ``b`` contributes ``x_a`` if ``a == b`` and
``b x_a x_b prod_{a<j<b} (1 + b x_j)`` otherwise.

Expansions into the grove basis peel off the lowest homogeneous component:
its forest-basis coefficients ``ct T_F`` are exactly the grove coefficients in
that degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .forest import (
    EMPTY, IndexedForest, format_composition, format_forest, forests_up_to, qdes, to_word, trim, zigzag_composition, zigzag_forest,
)
from .operators import bs_op, compose_extractor, t_op, tk_op, tl_op, tr_op
from .ring import (
    BETA, ONE, ZERO, BetaCoeff, BetaPolynomial, constant_term,
    homogeneous_component, lowest_component, specialize_beta, x,
)
from .schubert import Permutation, grothendieck

__all__ = [
    "Expansion", "IterationCapExceeded", "NotQuasisymmetric",
    "forest_polynomial", "grove_polynomial", "multifundamental",
    "check_grove_characterization", "forest_coefficients", "expand_grove",
    "expand_forest", "check_grove_duality", "grothendieck_to_grove",
    "grove_product_expand", "grove_to_forest", "forest_to_grove_sign_experiment",
    "is_quasisymmetric", "expand_multifundamental", "extractor_coefficient",
]

DEFAULT_ITERATION_CAP = 64


class IterationCapExceeded(RuntimeError):
    pass


class NotQuasisymmetric(ValueError):
    pass


# -- generators ------------------------------------------------------------

def _label_weight(a: int, b: int, set_valued: bool) -> BetaPolynomial:
    if a == b:
        return x(a)
    if not set_valued:
        return ZERO
    w = BETA * x(a) * x(b)
    for j in range(a + 1, b):
        w = w * (ONE + BETA * x(j))
    return w


def _labelings_sum(F: IndexedForest, set_valued: bool) -> BetaPolynomial:
    nodes = F.nodes()
    table: dict[int, list[BetaPolynomial]] = {}  # node id -> W(m) for m = 1..rho+1

    def child_w(child, m):
        kind, val = child
        if kind == "leaf":
            return ONE if val >= m else ZERO
        w = table[val]
        return w[m - 1] if m - 1 < len(w) else ZERO

    for node in reversed(nodes):
        rho = node.rho
        below = [child_w(node.left, b) * child_w(node.right, b + 1) for b in range(1, rho + 1)]
        w = [ZERO] * (rho + 1)
        for a in range(1, rho + 1):
            for b in range(a, rho + 1):
                if below[b - 1]:
                    term = _label_weight(a, b, set_valued) * below[b - 1]
                    for m in range(1, a + 1):
                        w[m - 1] = w[m - 1] + term
        table[node.id] = w
    out = ONE
    for node in nodes:
        if node.parent is None:
            out = out * table[node.id][0]
    return out


@lru_cache(maxsize=None)
def forest_polynomial(F: IndexedForest) -> BetaPolynomial:
    """Sum of ``x_kappa`` over compatible labelings of ``F``."""
    return _labelings_sum(F, set_valued=False)


@lru_cache(maxsize=None)
def _grove_symbolic(F: IndexedForest) -> BetaPolynomial:
    return _labelings_sum(F, set_valued=True)


@lru_cache(maxsize=None)
def grove_polynomial(F: IndexedForest, beta: int | None = None) -> BetaPolynomial:
    """Sum of ``b^(|kappa|-|F|) x_kappa`` over compatible set-valued labelings.

    With ``beta`` given the parameter is specialized to that integer.
    """
    g = _grove_symbolic(F)
    return g if beta is None else specialize_beta(g, beta)


def multifundamental(alpha: Sequence[int], n: int) -> BetaPolynomial:
    """Multi-fundamental polynomial of ``alpha`` truncated to ``x1..xn``.

    Direct enumeration of chains ``S_1, ..., S_k`` of nonempty subsets of
    ``[n]`` with ``max S_j <= min S_{j+1}``, strict at the ends of the parts.
    """
    alpha = tuple(alpha)
    if len(alpha) > n:
        from .forest import TooManyParts
        raise TooManyParts(f"{len(alpha)} parts do not fit in {n} variables")
    k = sum(alpha)
    strict_after = set()
    acc = 0
    for a in alpha[:-1]:
        acc += a
        strict_after.add(acc)

    subsets_from = {
        lo: [s for r in range(1, n - lo + 2) for s in combinations(range(lo, n + 1), r)]
        for lo in range(1, n + 2)
    }
    weights: dict[tuple[int, tuple[int, ...]], int] = {}

    def walk(j, lo, exps, extra):
        if j > k:
            key = (extra, tuple(exps))
            weights[key] = weights.get(key, 0) + 1
            return
        for s in subsets_from.get(lo, []):
            for v in s:
                exps[v - 1] += 1
            nxt = s[-1] + 1 if j in strict_after else s[-1]
            walk(j + 1, nxt, exps, extra + len(s) - 1)
            for v in s:
                exps[v - 1] -= 1

    walk(1, 1, [0] * n, 0)
    return BetaPolynomial(weights)


# -- expansions ------------------------------------------------------------

def _index_json(basis: str, index):
    if basis == "multifund":
        return {"composition": list(index)}
    if isinstance(index, IndexedForest):
        return {"word": to_word(index)}
    if isinstance(index, Permutation):
        return {"oneline": list(index.one_line)}
    return index


def _index_key(index):
    if isinstance(index, IndexedForest):
        return (len(index), to_word(index))
    if isinstance(index, Permutation):
        return (index.length(), index.one_line)
    return (sum(index), tuple(index))


@dataclass
class Expansion:
    """``f = sum coefficients[index] * basis_element(index)``.

    ``basis`` is one of ``"forest"``, ``"grove"``, ``"multifund"``; for the
    latter the indices are compositions and ``n`` fixes the zigzag forests.
    ``beta`` is ``None`` for the symbolic basis, else the specialized value.
    """
    basis: str
    coefficients: dict
    beta: int | None = None
    n: int | None = None
    input: BetaPolynomial | None = field(default=None, repr=False)

    def items(self):
        return sorted(self.coefficients.items(), key=lambda kv: _index_key(kv[0]))

    def __getitem__(self, index) -> BetaCoeff:
        return self.coefficients.get(index, BetaCoeff(0))

    def __len__(self):
        return len(self.coefficients)

    def basis_element(self, index) -> BetaPolynomial:
        if self.basis == "forest":
            return forest_polynomial(index)
        if self.basis == "grove":
            return grove_polynomial(index, self.beta)
        if self.basis == "multifund":
            return grove_polynomial(zigzag_forest(index, self.n), self.beta)
        raise ValueError(f"unknown basis {self.basis!r}")

    def reconstruct(self) -> BetaPolynomial:
        out = ZERO
        for index, c in self.coefficients.items():
            out = out + self.basis_element(index).scale(c)
        return out

    def reconstructs(self) -> bool:
        return self.input is not None and self.reconstruct() == self.input

    def specialize(self, c: int) -> dict:
        return {k: v.specialize(c) for k, v in self.coefficients.items()}

    def negative_indices(self, at: int | None = None) -> list:
        """Indices whose coefficient is not a nonnegative integer (after ``b -> at``)."""
        bad = []
        for index, c in self.items():
            if at is not None:
                ok = c.specialize(at) >= 0
            elif self.beta is not None:
                ok = c.is_constant() and int(c) >= 0
            else:
                ok = all(v >= 0 for v in c.terms.values())
            if not ok:
                bad.append(index)
        return bad

    def to_json(self) -> dict:
        beta = "symbolic" if self.beta is None else str(self.beta)
        return {
            "schema": "grove-kit/1",
            "basis": self.basis,
            "beta": beta,
            "n": self.n,
            "terms": [{"index": _index_json(self.basis, k), "coeff": str(v)} for k, v in self.items()],
        }

    def to_text(self) -> str:
        lines = []
        for k, v in self.items():
            if self.basis == "multifund":
                name = format_composition(k)
            else:
                name = format_forest(k)
            lines.append(f"{name} -> {v}")
        return "\n".join(lines) if lines else "0"


def _check_support(f: BetaPolynomial, n: int):
    if f.nvars() > n:
        raise ValueError(f"polynomial uses x{f.nvars()} but the window is n={n}")


def forest_coefficients(h: BetaPolynomial, n: int) -> dict[IndexedForest, BetaCoeff]:
    """Forest-basis coefficients ``ct T_F h`` of a homogeneous ``h`` in ``x1..xn``.

    Walks weakly increasing words from the right (largest letter acts first),
    pruning as soon as an image vanishes.
    """
    if not h:
        return {}
    d = h.degree()
    out: dict[IndexedForest, BetaCoeff] = {}

    def walk(g, top, suffix):
        if len(suffix) == d:
            c = constant_term(g)
            if c:
                out[_from_word_cached(tuple(reversed(suffix)))] = c
            return
        for j in range(1, top + 1):
            img = t_op(g, j)
            if img:
                suffix.append(j)
                walk(img, j, suffix)
                suffix.pop()

    walk(h, n, [])
    return out


@lru_cache(maxsize=None)
def _from_word_cached(word: tuple[int, ...]) -> IndexedForest:
    from .forest import from_word
    return from_word(word)


def expand_grove(f: BetaPolynomial, n: int, beta: int | None = None,
                 cap: int = DEFAULT_ITERATION_CAP) -> Expansion:
    """Expand ``f`` (support in ``x1..xn``) in grove polynomials by graded peeling."""
    if beta is not None:
        f = specialize_beta(f, beta)
    _check_support(f, n)
    coeffs: dict[IndexedForest, BetaCoeff] = {}
    rest = f
    rounds = 0
    while rest:
        rounds += 1
        if rounds > cap:
            raise IterationCapExceeded(f"peeling did not finish within {cap} rounds")
        low = lowest_component(rest)
        for F, c in forest_coefficients(low, n).items():
            coeffs[F] = coeffs.get(F, BetaCoeff(0)) + c
            rest = rest - grove_polynomial(F, beta).scale(c)
    return Expansion("grove", {k: v for k, v in coeffs.items() if v}, beta, n, f)


def expand_forest(f: BetaPolynomial, n: int) -> Expansion:
    """Expand ``f`` in forest polynomials, one homogeneous component at a time."""
    _check_support(f, n)
    coeffs: dict[IndexedForest, BetaCoeff] = {}
    for d in sorted({sum(m) for m in f.monomials()}):
        coeffs.update(forest_coefficients(homogeneous_component(f, d), n))
    return Expansion("forest", coeffs, None, n, f)


def extractor_coefficient(F: IndexedForest, f: BetaPolynomial) -> BetaCoeff:
    """``ct H_F f``."""
    return constant_term(compose_extractor(F)(f))


# -- characterization and duality -----------------------------------------

@dataclass
class Report:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, what):
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def merge(self, other: "Report") -> "Report":
        self.checks += other.checks
        self.failures.extend(other.failures)
        return self


def check_grove_characterization(F: IndexedForest) -> Report:
    """Check how ``TK_i``, ``T_i``, ``TL_i`` and ``TR_i`` act on ``G_F``.

    Covers every ``i`` up to one past the last leaf of ``F``, plus the
    constant-term normalization.
    """
    rep = Report(f"characterization {format_forest(F)}")
    g = grove_polynomial(F)
    rep.record(constant_term(g) == (1 if F == EMPTY else 0), ("ct", F))
    descents = qdes(F)
    for i in range(1, F.last_leaf() + 2):
        tk, t = tk_op(g, i), t_op(g, i)
        ri, ri1 = bs_op(g, i), bs_op(g, i + 1)
        if i in descents:
            quot = grove_polynomial(trim(F, i)[0])
            rep.record(tk == quot, ("TK", F, i))
            rep.record(t == quot + BETA * ri, ("T", F, i))
            rep.record(tl_op(g, i) == quot + BETA * ri, ("TL", F, i))
            rep.record(tr_op(g, i) == quot + BETA * ri1, ("TR", F, i))
        else:
            rep.record(tk == -BETA * ri, ("TK", F, i))
            rep.record(tk == -BETA * ri1, ("TK via R_{i+1}", F, i))
            rep.record(not t, ("T", F, i))
            rep.record(not tl_op(g, i) and not tr_op(g, i), ("TL/TR", F, i))
    return rep


@dataclass
class DualityMatrix:
    forests: list[IndexedForest]
    matrix: list[list[BetaCoeff]]
    failures: list[tuple[IndexedForest, IndexedForest, BetaCoeff]]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_grove_duality(max_size: int, n: int) -> DualityMatrix:
    """``ct H_F G_G`` for all forests with size ``<= max_size`` and ``rho <= n``."""
    forests = forests_up_to(max_size, n)
    matrix, failures = [], []
    for F in forests:
        H = compose_extractor(F)
        row = []
        for G in forests:
            c = constant_term(H(grove_polynomial(G)))
            row.append(c)
            if c != (1 if F == G else 0):
                failures.append((F, G, c))
        matrix.append(row)
    return DualityMatrix(forests, matrix, failures)


# -- positivity ------------------------------------------------------------

@dataclass
class PositivityReport:
    expansion: Expansion
    violations: list
    note: str = ""

    @property
    def ok(self) -> bool:
        return not self.violations


def grothendieck_to_grove(w: Permutation, n: int) -> tuple[Expansion, dict, PositivityReport]:
    """Grove expansion of the Grothendieck polynomial of ``w`` in ``S_n``.

    Returns the expansion, the integers ``a`` with coefficient
    ``b^(|F| - l(w)) * a``, and a report flagging coefficients of any other
    shape or with ``a < 0``.
    """
    exp = expand_grove(grothendieck(w, max(n, len(w), 1)), n)
    ell = w.length()
    a, bad = {}, []
    for F, c in exp.items():
        terms = c.terms
        shift = len(F) - ell
        if shift < 0 or set(terms) != {shift} or terms[shift] < 0:
            bad.append((F, str(c)))
        else:
            a[F] = terms[shift]
    return exp, a, PositivityReport(exp, bad)


def grove_product_expand(F: IndexedForest, G: IndexedForest, n: int, beta: int | None = 1) -> PositivityReport:
    """Expansion of ``G_F * G_G``; the verdict is nonnegativity at ``b = 1``."""
    exp = expand_grove(grove_polynomial(F, beta) * grove_polynomial(G, beta), n, beta)
    return PositivityReport(exp, exp.negative_indices(at=1))


def grove_to_forest(F: IndexedForest, n: int) -> PositivityReport:
    """Forest expansion of the ``b = 1`` grove polynomial of ``F``."""
    exp = expand_forest(grove_polynomial(F, 1), n)
    return PositivityReport(exp, exp.negative_indices())


@dataclass
class SignReport:
    forest: IndexedForest
    expansion: Expansion
    alternating: bool
    signs: list[tuple[IndexedForest, int, int]]  # (G, |G| - |F|, coefficient)


def forest_to_grove_sign_experiment(F: IndexedForest, n: int) -> SignReport:
    """Expand ``P_F`` in ``b = 1`` grove polynomials and record the sign pattern.

    Purely observational; nothing is asserted about the outcome.
    """
    exp = expand_grove(forest_polynomial(F), n, beta=1)
    signs = [(G, len(G) - len(F), int(c)) for G, c in exp.items()]
    alternating = all((-1) ** shift * c >= 0 for _, shift, c in signs)
    return SignReport(F, exp, alternating, signs)


# -- quasisymmetric polynomials -------------------------------------------

def is_quasisymmetric(f: BetaPolynomial, n: int) -> bool:
    """Whether ``f`` lies in ``x1..xn`` and is quasisymmetric there."""
    if f.nvars() > n:
        return False
    groups: dict[tuple[int, ...], dict] = {}
    for mono, c in f.terms().items():
        pattern = tuple(e for e in mono if e)
        groups.setdefault(pattern, {})[mono] = c
    for pattern, members in groups.items():
        if len(members) != comb(n, len(pattern)):
            return False
        if len(set(members.values())) != 1:
            return False
    return True


def expand_multifundamental(f: BetaPolynomial, n: int, beta: int | None = None) -> Expansion:
    """Expand a quasisymmetric ``f`` in ``x1..xn`` in multi-fundamental polynomials."""
    if beta is not None:
        f = specialize_beta(f, beta)
    if not is_quasisymmetric(f, n):
        raise NotQuasisymmetric(f"{f} is not quasisymmetric in x1..x{n}")
    exp = expand_grove(f, n, beta)
    coeffs = {}
    for Z, c in exp.coefficients.items():
        if not qdes(Z) <= {n}:
            raise AssertionError(f"non-zigzag forest {format_forest(Z)} in a quasisymmetric expansion")
        coeffs[zigzag_composition(Z)] = c
    return Expansion("multifund", coeffs, beta, n, f)
