import random
from fractions import Fraction

import pytest

from grovekit.bases import expand_grove, grove_polynomial
from grovekit.forest import forests_up_to, from_word
from grovekit.oracle import candidate_forests, grove_matrix_rank, solve_grove_coefficients
from grovekit.ring import parse
from grovekit.verify import random_polynomial


@pytest.mark.parametrize("beta", [1, -1])
def test_grove_basis_full_rank(beta):
    forests = forests_up_to(3, 3)
    assert grove_matrix_rank(forests, beta) == len(forests)


def test_candidates_cover_expansion_support():
    f = parse("x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1^2*x2")
    exp = expand_grove(f, 4, beta=1)
    assert set(exp.coefficients) <= set(candidate_forests(3, 4))


def test_solver_on_worked_example():
    f = parse("x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1^2*x2")
    got = solve_grove_coefficients(f, 4)
    assert {str(F): v for F, v in got.items()} == {
        "2,2,3": Fraction(1), "1,2,2,3": Fraction(-1), "1,1,2,3": Fraction(-2)}


@pytest.mark.parametrize("seed", range(5))
def test_solver_agrees_with_peeling(seed):
    rng = random.Random(seed)
    f = random_polynomial(rng, nvars=3, max_degree=3, beta_degree=0, coeff=9)
    exp = expand_grove(f, 3, beta=1)
    assert solve_grove_coefficients(f, 3) == {F: Fraction(int(c)) for F, c in exp.items()}


def test_solver_single_grove():
    F = from_word([1, 2])
    assert solve_grove_coefficients(grove_polynomial(F, 1), 2) == {F: Fraction(1)}
