import numpy as np
import pytest

from fock_entanglement import Statistics
from fock_entanglement.errors import StatisticsMismatchError
from fock_entanglement.operators import NormalForm, NormalTerm, monomials, normal_order, parse


def test_bose_commutator():
    form = normal_order(parse("a(1)*ad(1)"), Statistics.BOSE)
    assert form.coefficient((1,), (1,)) == pytest.approx(1)
    assert form.coefficient((), ()) == pytest.approx(1)
    assert len(form) == 2
    assert str(form) == "(1,0) + (1,0)*ad(1)*a(1)"


def test_fermi_anticommutator_distinct_modes():
    form = normal_order(parse("a(1)*ad(2)"), Statistics.FERMI)
    assert len(form) == 1
    assert form.coefficient((2,), (1,)) == pytest.approx(-1)


def test_fermi_anticommutator_same_mode():
    form = normal_order(parse("a(1)*ad(1)"), Statistics.FERMI)
    assert form.coefficient((), ()) == pytest.approx(1)
    assert form.coefficient((1,), (1,)) == pytest.approx(-1)


def test_fermi_creators_are_sorted_with_sign():
    form = normal_order(parse("ad(2)*ad(1)"), Statistics.FERMI)
    assert form.coefficient((1, 2), ()) == pytest.approx(-1)
    assert normal_order(parse("ad(1)*ad(1)"), Statistics.FERMI).terms == ()


def test_bose_creators_commute():
    form = normal_order(parse("ad(2)*ad(1) - ad(1)*ad(2)"), Statistics.BOSE)
    assert len(form) == 0
    assert str(form) == "(0,0)"


def test_number_operator_squared():
    # n^2 = ad a ad a = ad ad a a + ad a
    form = normal_order(parse("N(1)^2"), Statistics.BOSE)
    assert form.coefficient((1, 1), (1, 1)) == pytest.approx(1)
    assert form.coefficient((1,), (1,)) == pytest.approx(1)


def test_fermi_number_operator_is_idempotent():
    form = normal_order(parse("N(1)^2 - N(1)"), Statistics.FERMI)
    assert len(form) == 0


def test_property_projector_normal_form():
    form = normal_order(parse("0.5*ad(1)*a(1)*(3 - ad(1)*a(1))"), Statistics.BOSE)
    # 1/2 n (3 - n) = n - 1/2 ad ad a a
    assert form.coefficient((1,), (1,)) == pytest.approx(1)
    assert form.coefficient((1, 1), (1, 1)) == pytest.approx(-0.5)
    assert len(form) == 2


def test_normal_form_is_idempotent():
    expr = parse("a(2)*ad(1)*a(1)*ad(2) + 2*a(1)^2*ad(1)^2")
    for statistics in Statistics:
        form = normal_order(expr, statistics)
        again = normal_order(form.to_expression(), statistics)
        assert again == form
        assert normal_order(form, statistics) is form


def test_normal_order_rejects_other_statistics_form():
    form = normal_order(parse("ad(1)"), Statistics.BOSE)
    with pytest.raises(StatisticsMismatchError):
        normal_order(form, Statistics.FERMI)


def test_normal_form_merges_duplicates_and_prunes():
    form = NormalForm(
        Statistics.BOSE,
        [
            NormalTerm(1.0, (1,), ()),
            NormalTerm(-1.0, (1,), ()),
            NormalTerm(2.0, (2,), (1,)),
            NormalTerm(1e-16, (3,), ()),
        ],
    )
    assert [term.key for term in form] == [((2,), (1,))]


def test_compact_string_drops_unit_coefficients():
    form = normal_order(parse("ad(1) + 0.5*ad(2)"), Statistics.BOSE)
    assert form.compact_string() == "ad(1) + (0.5,0)*ad(2)"


def test_monomials_ordering_and_count():
    bose = monomials([1], Statistics.BOSE, max_degree=2)
    assert [term.monomial_string() for term in bose] == [
        "ad(1)",
        "a(1)",
        "ad(1)*ad(1)",
        "ad(1)*a(1)",
        "a(1)*a(1)",
    ]
    fermi = monomials([1, 2], Statistics.FERMI, max_degree=4)
    # every subset of creators times every subset of annihilators, minus the identity
    assert len(fermi) == 4 * 4 - 1
    assert all(term.degree >= 1 for term in fermi)


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_normal_ordering_preserves_parity(statistics):
    rng = np.random.default_rng(11)
    for _ in range(100):
        length = int(rng.integers(1, 7))
        word = [f"{rng.choice(['ad', 'a'])}({int(rng.integers(1, 4))})" for _ in range(length)]
        form = normal_order(parse("*".join(word)), statistics)
        assert all(term.degree % 2 == length % 2 for term in form)
