"""
Desk-scale verification suites, shared by the CLI and the test-suite.

Each suite returns a :class:`~grovekit.bases.Report` listing failed checks.
"""

from __future__ import annotations

import random
from itertools import product as iproduct

from .bases import (
    Report, check_grove_characterization, check_grove_duality,
    expand_multifundamental, forest_polynomial, grothendieck_to_grove,
    grove_polynomial, grove_product_expand, grove_to_forest, multifundamental,
)
from .forest import forests_up_to, qdes, zigzag_forest
from .operators import (
    bs_op, compose_forest_T, partial, pi, t_op, tk_op, tl_op, tr_op,
)
from .ring import (
    BETA, ONE, ZERO, BetaPolynomial, constant_term, specialize_beta, x,
)
from .schubert import check_extractor_duality, permutations

__all__ = [
    "random_polynomial", "compositions", "operator_suite", "duality_suite",
    "characterization_suite", "positivity_suite", "multifund_suite", "run_suite",
    "SUITES",
]

HAT = {"L": tl_op, "R": tr_op}


def random_polynomial(rng: random.Random, nvars: int = 6, max_degree: int = 4,
                      nterms: int = 6, coeff: int = 5, beta_degree: int = 2) -> BetaPolynomial:
    f = ZERO
    for _ in range(nterms):
        mono = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            mono[rng.randrange(nvars)] += 1
        f = f + BetaPolynomial({(rng.randint(0, beta_degree), tuple(mono)): rng.randint(-coeff, coeff)})
    return f


def compositions(max_parts: int, max_part: int):
    for t in range(max_parts + 1):
        yield from iproduct(range(1, max_part + 1), repeat=t)


def _operator_relations(f: BetaPolynomial, g: BetaPolynomial, rep: Report, positions=(1, 2, 3, 4)):
    f0 = specialize_beta(f, 0)
    for i in positions:
        rec = lambda ok, name: rep.record(ok, (name, i, str(f)))
        # nil-Hecke / 0-Hecke
        rec(not partial(partial(f, i), i), "partial^2")
        rec(pi(pi(f, i), i) == -BETA * pi(f, i), "pi^2")
        j = i + 1
        rec(partial(partial(partial(f, i), j), i) == partial(partial(partial(f, j), i), j), "partial braid")
        rec(pi(pi(pi(f, i), j), i) == pi(pi(pi(f, j), i), j), "pi braid")
        for k in positions:
            if abs(i - k) >= 2:
                rec(partial(partial(f, k), i) == partial(partial(f, i), k), "partial commute")
                rec(pi(pi(f, k), i) == pi(pi(f, i), k), "pi commute")
            if i >= k:
                # R_i R_k = R_k R_{i+1}
                rec(bs_op(bs_op(f, k), i) == bs_op(bs_op(f, i + 1), k), "R relation")
            if i > k:
                rec(t_op(t_op(f, k), i) == t_op(t_op(f, i + 1), k), "Thompson relation")
        # b = 0 degenerations
        rec(specialize_beta(pi(f, i), 0) == partial(f0, i), "pi at b=0")
        rec(specialize_beta(tk_op(f, i), 0) == t_op(f0, i), "TK at b=0")
        # forms of TK
        tk = tk_op(f, i)
        rec(tk == bs_op(pi(f, i), i), "TK = R_i pi_i")
        rec(tk == bs_op(pi(f, i), i + 1), "TK = R_{i+1} pi_i")
        rec(tk == bs_op(partial((ONE + BETA * x(i + 1)) * f, i), i), "TK = R_i D_i (1 + b x_{i+1})")
        rec(tk == t_op(f, i) - BETA * bs_op(f, i), "TK = T - b R_i")
        # extractor letters
        rec(tl_op(f, i) == tk + BETA * bs_op(f, i), "TL = TK + b R_i")
        rec(tr_op(f, i) == tk + BETA * bs_op(f, i + 1), "TR = TK + b R_{i+1}")
        for A, H in HAT.items():
            rec(H(f * g, i) == H(f, i) * bs_op(g, i) + bs_op(f, i + 1) * H(g, i), f"Leibniz {A}")
        # straightening identities; the last term carries a factor b, which is invisible at b = 1
        if i <= 3:
            for A, HA in HAT.items():
                for B, HB in HAT.items():
                    lhs = HA(bs_op(HB(f, i + 1), i + 1), i)
                    t1 = bs_op(HA(tr_op(f, i + 1), i), i + 1)
                    t2 = bs_op(HA(tl_op(f, i + 1), i + 1), i)
                    t3 = bs_op(bs_op(HA(f, i + 1), i + 2), i)
                    rec(lhs == t1 + t2 + BETA * t3, f"straighten {A}{B}")
                    rec(specialize_beta(lhs - t1 - t2 - t3, 1) == ZERO, f"straighten {A}{B} at b=1")
                rec(HA(bs_op(f, i + 1), i) == bs_op(HA(f, i + 1), i) + bs_op(HA(f, i), i + 1),
                    f"commute R {A}")


def _kernel_checks(rng: random.Random, rep: Report, n: int = 4, max_size: int = 3):
    # elements of ker T_i built from forest polynomials, plus random non-kernel ones
    forests = forests_up_to(max_size, n)
    for i in range(1, n + 1):
        pool = [F for F in forests if i not in qdes(F)]
        f = ZERO
        for F in rng.sample(pool, min(4, len(pool))):
            f = f + forest_polynomial(F) * (ONE + BETA * rng.randint(-3, 3)) * rng.randint(1, 5)
        rep.record(not t_op(f, i), ("kernel element", i))
        a = tk_op(f, i) + BETA * bs_op(f, i)
        b = tk_op(f, i) + BETA * bs_op(f, i + 1)
        rep.record(not a and not b, ("kernel identity", i))
        h = random_polynomial(rng, nvars=n, max_degree=3)
        zero_t = not t_op(h, i)
        zero_a = not (tk_op(h, i) + BETA * bs_op(h, i))
        zero_b = not (tk_op(h, i) + BETA * bs_op(h, i + 1))
        rep.record(zero_t == zero_a == zero_b, ("kernel equivalence", i))


def operator_suite(seed: int = 42, count: int = 200) -> Report:
    """Operator relations on ``count`` random polynomials in ``x1..x6``, degree <= 4, symbolic b."""
    rng = random.Random(seed)
    rep = Report("operators")
    for _ in range(count):
        f = random_polynomial(rng)
        g = random_polynomial(rng, nterms=3, max_degree=2)
        _operator_relations(f, g, rep)
    _kernel_checks(rng, rep)
    return rep


def duality_suite(max_size: int = 3, n: int = 4) -> Report:
    rep = Report("duality")
    dm = check_grove_duality(max_size, n)
    for F, G, c in dm.failures:
        rep.failures.append(("ct H_F G_G", str(F), str(G), str(c)))
    rep.checks += len(dm.forests) ** 2
    for F in dm.forests:
        TF = compose_forest_T(F)
        for G in dm.forests:
            c = constant_term(TF(forest_polynomial(G)))
            rep.record(c == (1 if F == G else 0), ("ct T_F P_G", str(F), str(G), str(c)))
    for m in range(1, min(n, 4) + 1):
        dr = check_extractor_duality(m)
        rep.checks += 2 * len(dr.perms) ** 2
        rep.failures.extend((kind, str(v), str(w), c) for kind, v, w, c in dr.failures)
    return rep


def characterization_suite(max_size: int = 4, n: int = 4) -> Report:
    rep = Report("characterization")
    for F in forests_up_to(max_size, n):
        rep.merge(check_grove_characterization(F))
    return rep


def positivity_suite(max_size: int = 2, n: int = 3) -> Report:
    rep = Report("positivity")
    for w in permutations(min(n, 4)):
        exp, _, pr = grothendieck_to_grove(w, n)
        rep.record(pr.ok and exp.reconstructs(), ("grothendieck", str(w), pr.violations))
    forests = forests_up_to(min(max_size, 2), n)
    for F in forests:
        for G in forests:
            pr = grove_product_expand(F, G, n)
            rep.record(pr.ok and pr.expansion.reconstructs(), ("product", str(F), str(G), pr.violations))
    for F in forests_up_to(max_size, n):
        pr = grove_to_forest(F, n)
        rep.record(pr.ok and pr.expansion.reconstructs(), ("grove to forest", str(F), pr.violations))
    return rep


def multifund_suite(max_size: int = 3, n: int = 4) -> Report:
    rep = Report("multifund")
    for m in sorted({min(3, n), n}):
        for alpha in compositions(min(3, m), 3):
            Z = zigzag_forest(alpha, m)
            lhs = multifundamental(alpha, m)
            rep.record(lhs == grove_polynomial(Z), ("multifundamental = grove", alpha, m))
            for i in range(1, m):
                if i not in qdes(Z):
                    rep.record(not t_op(lhs, i), ("zigzag kernel", alpha, m, i))
            exp = expand_multifundamental(lhs, m)
            rep.record(dict(exp.coefficients) == {alpha: 1}, ("multifundamental duality", alpha, m))
    return rep


SUITES = {
    "operators": lambda args: operator_suite(args.get("seed", 42), args.get("count", 200)),
    "duality": lambda args: duality_suite(args.get("max_size", 3), args.get("n", 4)),
    "characterization": lambda args: characterization_suite(args.get("max_size", 4), args.get("n", 4)),
    "positivity": lambda args: positivity_suite(args.get("max_size", 2), args.get("n", 3)),
    "multifund": lambda args: multifund_suite(args.get("max_size", 3), args.get("n", 4)),
}


def run_suite(name: str, **args) -> list[Report]:
    names = list(SUITES) if name == "all" else [name]
    return [SUITES[s](args) for s in names]
