import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import schur_by_tableaux, standard_fillings
from quiverlr.poly import (
    Polynomial,
    complete_homogeneous,
    divided_difference,
    elementary_y,
    expand_symmetric_in_schur,
    monomial_coefficient,
    schur_eval,
    super_complete,
    super_schur_eval,
)
from quiverlr.schubert import Permutation, all_permutations, longest, schubert_oracle
from quiverlr.schur import SchurElement
from quiverlr.stanley import reduced_words
from quiverlr.tableaux import partitions

x, y = Polynomial.x, Polynomial.y
one = Polynomial.constant(1)


EXPONENTS = [e for e in itertools.product(range(5), repeat=4) if sum(e) <= 4]


@st.composite
def polynomials(draw):
    """Random integer polynomials in x_1..x_4 of degree at most 4."""
    terms = draw(st.lists(st.tuples(st.sampled_from(EXPONENTS), st.integers(-5, 5)), max_size=6))
    return Polynomial({(e, ()): c for e, c in terms})


def test_polynomial_basics():
    f = (x(1) - y(1)) * (x(2) - y(1))
    assert f.degree() == 2 and f.is_homogeneous(2)
    assert f.coefficient((1, 1)) == 1
    assert f.coefficient((1,), (1,)) == -1
    assert f.nx == 2 and f.ny == 1
    assert Polynomial({((1, 0, 0), ()): 1}) == x(1)
    with pytest.raises(ValueError):
        Polynomial({((-1,), ()): 1})
    assert (f - f).is_zero()
    assert f.swap_x(1) == (x(2) - y(1)) * (x(1) - y(1))


def test_divided_difference_examples():
    assert divided_difference(x(1), 1) == one
    assert divided_difference(x(2), 1) == -one
    assert divided_difference(x(1) * x(2), 1) == Polynomial()
    assert divided_difference(x(1, 2), 1) == x(1) + x(2)
    assert divided_difference(x(1, 3) * x(2), 1) == x(1) * x(2) * (x(1) + x(2))
    assert divided_difference(y(1), 1) == Polynomial()
    with pytest.raises(ValueError):
        divided_difference(x(1), 0)


@settings(max_examples=60, deadline=None)
@given(polynomials(), st.integers(1, 3))
def test_divided_difference_exact_and_nilpotent(f, i):
    g = divided_difference(f, i, check=True)
    assert divided_difference(g, i) == Polynomial()
    assert g.swap_x(i) == g


@settings(max_examples=60, deadline=None)
@given(polynomials(), st.integers(1, 2))
def test_braid_relation(f, i):
    d = divided_difference
    assert d(d(d(f, i), i + 1), i) == d(d(d(f, i + 1), i), i + 1)


@settings(max_examples=40, deadline=None)
@given(polynomials(), polynomials())
def test_leibniz_rule_for_symmetric_factor(f, g):
    # d_1(s g) = s d_1(g) when s is symmetric in x_1, x_2
    sym = f + f.swap_x(1)
    assert divided_difference(sym * g, 1) == sym * divided_difference(g, 1)


def test_small_double_schubert_polynomials():
    S = lambda text: schubert_oracle(Permutation.parse(text))
    assert S("123") == one
    assert S("213") == x(1) - y(1)
    assert S("132") == x(1) + x(2) - y(1) - y(2)
    assert S("231") == (x(1) - y(1)) * (x(2) - y(1))
    assert S("312") == (x(1) - y(1)) * (x(1) - y(2))
    assert S("321") == (x(1) - y(1)) * (x(1) - y(2)) * (x(2) - y(1))


@pytest.mark.parametrize("w", list(all_permutations(4)), ids=str)
def test_oracle_does_not_depend_on_reduced_word(w):
    target = w.inverse().compose(longest(4))
    words = sorted(reduced_words(target))
    reference = schubert_oracle(w)
    for word in words[:4] + words[-2:]:
        assert schubert_oracle(w, word=word) == reference


def test_oracle_rejects_non_reduced_word():
    with pytest.raises(ValueError):
        schubert_oracle(Permutation.parse("213"), word=(1,))


def test_single_schubert_without_y():
    assert schubert_oracle(Permutation.parse("321"), use_y=False) == x(1, 2) * x(2)


@pytest.mark.parametrize("lam", [lam for n in range(0, 5) for lam in partitions(n)])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_schur_eval_matches_tableaux(lam, n):
    assert schur_eval(lam, n) == schur_by_tableaux(lam, n)


@pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in partitions(n)])
def test_square_free_coefficient_counts_standard_tableaux(lam):
    n = sum(lam)
    assert monomial_coefficient(schur_eval(lam, n), (1,) * n) == standard_fillings(lam)


def test_complete_and_elementary():
    assert complete_homogeneous(2, 2) == x(1, 2) + x(1) * x(2) + x(2, 2)
    assert complete_homogeneous(0, 3) == one
    assert complete_homogeneous(-1, 3) == Polynomial()
    assert elementary_y(2, 3) == y(1) * y(2) + y(1) * y(3) + y(2) * y(3)
    # h_k(x/y) = sum_b (-1)^b e_b(y) h_{k-b}(x)
    assert super_complete(1, 2, 2) == x(1) + x(2) - y(1) - y(2)


@pytest.mark.parametrize("lam", [lam for n in range(0, 4) for lam in partitions(n)])
def test_super_schur_without_y_is_ordinary(lam):
    assert super_schur_eval(lam, 3, 0) == schur_eval(lam, 3)


def test_super_schur_small_cases():
    assert super_schur_eval((1,), 2, 1) == x(1) + x(2) - y(1)
    # s_{11}(x/y) with one x and one y: e_2 of the super alphabet
    assert super_schur_eval((1, 1), 1, 1) == y(1, 2) - x(1) * y(1)


@pytest.mark.parametrize("d", range(0, 7))
def test_expand_inverts_evaluation(d):
    n = d
    for lam in partitions(d):
        assert expand_symmetric_in_schur(schur_eval(lam, n), n, d) == SchurElement.schur(lam)


def test_expand_rejects_bad_input():
    with pytest.raises(ValueError):
        expand_symmetric_in_schur(x(1), 2, 1)
    with pytest.raises(ValueError):
        expand_symmetric_in_schur(y(1), 1, 1)
    with pytest.raises(ValueError):
        expand_symmetric_in_schur(x(1) + x(2) + one, 2, 1)
    with pytest.raises(ValueError):
        expand_symmetric_in_schur(schur_eval((2,), 1), 1, 2)
