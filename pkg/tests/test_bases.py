import json

import pytest

from _oracles import brute_labelings
from grovekit.bases import (
    IterationCapExceeded, NotQuasisymmetric, check_grove_characterization, check_grove_duality,
    expand_forest, expand_grove, expand_multifundamental, extractor_coefficient,
    forest_polynomial, forest_to_grove_sign_experiment, grove_polynomial, is_quasisymmetric,
    multifundamental,
)
from grovekit.forest import EMPTY, forests_up_to, from_word, zigzag_forest
from grovekit.ring import (
    ONE, BetaCoeff, lowest_component, parse, specialize_beta, x,
)

SMALL = forests_up_to(3, 3)


@pytest.mark.parametrize("F", forests_up_to(4, 4), ids=str)
def test_polynomials_match_labeling_enumeration(F):
    assert grove_polynomial(F) == brute_labelings(F, set_valued=True)
    assert forest_polynomial(F) == brute_labelings(F, set_valued=False)


@pytest.mark.parametrize("F", SMALL, ids=str)
def test_grove_structure(F):
    g = grove_polynomial(F)
    p = forest_polynomial(F)
    assert p.is_beta_free()
    assert all(sum(m) == len(F) for m in p.monomials())
    assert lowest_component(g) == p
    # b-grading: b^k x^m appears only with |m| - k = |F|
    assert all(sum(m) - b == len(F) for (b, m) in g.raw_terms())
    assert grove_polynomial(F, 0) == p


def test_small_values():
    assert grove_polynomial(EMPTY) == ONE
    assert forest_polynomial(from_word([1])) == x(1)
    assert grove_polynomial(from_word([2])) == parse("x1 + x2 + b*x1*x2")
    assert forest_polynomial(from_word([2])) == parse("x1 + x2")


@pytest.mark.parametrize("F", forests_up_to(3, 4), ids=str)
def test_characterization(F):
    rep = check_grove_characterization(F)
    assert rep.ok, rep.failures


def test_grove_duality_matrix():
    dm = check_grove_duality(2, 3)
    assert dm.ok
    assert all(dm.matrix[i][j] == (1 if i == j else 0)
               for i in range(len(dm.forests)) for j in range(len(dm.forests)))


@pytest.mark.parametrize("F", SMALL, ids=str)
def test_forest_polynomial_self_expansion(F):
    exp = expand_forest(forest_polynomial(F), 3)
    assert dict(exp.coefficients) == {F: BetaCoeff(1)}


@pytest.mark.parametrize("F", SMALL, ids=str)
def test_grove_self_expansion(F):
    exp = expand_grove(grove_polynomial(F), 3)
    assert dict(exp.coefficients) == {F: BetaCoeff(1)}
    exp1 = expand_grove(grove_polynomial(F, 1), 3, beta=1)
    assert dict(exp1.coefficients) == {F: BetaCoeff(1)}


def test_expansion_trivial_and_forest():
    exp = expand_grove(parse("7"), 1)
    assert exp.to_text() == "e -> 7"
    exp = expand_forest(parse("x1 + x2"), 2)
    assert exp.to_text() == "2 -> 1"


def test_section_six_example():
    f = parse("x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1^2*x2")
    exp = expand_grove(f, 4, beta=1)
    assert {str(F): int(c) for F, c in exp.items()} == {"2,2,3": 1, "1,2,2,3": -1, "1,1,2,3": -2}
    sym = expand_grove(f, 4)
    assert {str(F): str(c) for F, c in sym.items()} == {"2,2,3": "1", "1,2,2,3": "-b", "1,1,2,3": "-2*b"}
    assert sym.reconstructs() and exp.reconstructs()


def test_expansion_json_schema():
    exp = expand_grove(parse("x1 + x2"), 2)
    data = exp.to_json()
    assert data["schema"] == "grove-kit/1"
    assert data["basis"] == "grove" and data["beta"] == "symbolic"
    assert json.loads(json.dumps(data)) == data
    words = [t["index"]["word"] for t in data["terms"]]
    assert words == [[2], [1, 2]]


def test_expansion_rejects_wide_support():
    with pytest.raises(ValueError):
        expand_grove(x(3), 2)


def test_iteration_cap():
    with pytest.raises(IterationCapExceeded):
        expand_grove(parse("x1^2 + x1 + 1"), 1, cap=1)


def test_extractor_coefficients_match_expansion():
    f = parse("3*x1*x2 - x2^2 + b*x1^2*x3 + 2")
    exp = expand_grove(f, 3)
    for F in forests_up_to(3, 3):
        assert extractor_coefficient(F, f) == exp[F]


def test_multifundamental_small():
    assert multifundamental((), 3) == ONE
    assert multifundamental((1,), 2) == parse("x1 + x2 + b*x1*x2")
    assert multifundamental((2,), 1) == x(1) ** 2
    assert is_quasisymmetric(multifundamental((1, 2), 3), 3)


@pytest.mark.parametrize("alpha", [(1,), (2,), (1, 1), (2, 1), (1, 2), (2, 3, 1)])
def test_multifundamental_is_zigzag_grove(alpha):
    for n in range(len(alpha), 5):
        assert multifundamental(alpha, n) == grove_polynomial(zigzag_forest(alpha, n))


def test_multifundamental_expansion():
    f = parse("x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1^2*x2")
    assert is_quasisymmetric(f, 3)
    assert not is_quasisymmetric(f, 4)
    exp = expand_multifundamental(f, 3, beta=1)
    assert {k: int(v) for k, v in exp.items()} == {(2, 1): 1, (1, 2, 1): -1, (2, 1, 1): -2}
    assert exp.to_text().splitlines()[0] == "2,1 -> 1"
    with pytest.raises(NotQuasisymmetric):
        expand_multifundamental(x(1), 2)


def test_sign_experiment_reports():
    rep = forest_to_grove_sign_experiment(from_word([3]), 3)
    assert [(str(G), s, c) for G, s, c in rep.signs] == [("3", 0, 1), ("2,3", 1, -1), ("1,2,3", 2, 1)]
    assert rep.alternating
    assert specialize_beta(rep.expansion.reconstruct(), 1) == forest_polynomial(from_word([3]))
