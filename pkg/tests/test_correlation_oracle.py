import logging

import numpy as np
import pytest

from fock_entanglement import (
    FockVector,
    ModeBipartition,
    Statistics,
    correlation_oracle,
    expectation,
    mode_separability_rank,
    parse,
    vacuum,
)
from fock_entanglement.errors import BudgetExceededError, FermiParityIndefiniteError
from fock_entanglement.separability import (
    CorrelationOracleDecider,
    DeciderComparison,
    RankDecider,
    search_witness,
)
from tests.mocks import ConstantDecider, bose_pair, random_separability_batch, vacuum_superposition


def test_product_state_factorizes_for_every_pair():
    verdict = correlation_oracle(bose_pair(), ModeBipartition.parse("1|2"), max_degree=4)
    assert verdict.separable
    assert verdict.certificate.fidelity(bose_pair()) == pytest.approx(1)


def test_vacuum_superposition_has_witness():
    v = vacuum_superposition()
    verdict = correlation_oracle(v, ModeBipartition.parse("1|2"), max_degree=4)
    assert not verdict.separable
    witness = verdict.witness
    assert witness.first.monomial_string() == "ad(1)"
    assert witness.second.monomial_string() == "a(2)"
    assert witness.joint == pytest.approx(0.5)
    assert witness.product == pytest.approx(0)
    assert witness.recompute(v) == pytest.approx(witness.joint - witness.product)
    assert verdict.to_dict()["witness"]["a1"] == "ad(1)"


def test_vacuum_superposition_number_correlation():
    v = vacuum_superposition()
    joint = expectation(parse("ad(1)*a(1)*ad(2)*a(2)"), v)
    product = expectation(parse("ad(1)*a(1)"), v) * expectation(parse("ad(2)*a(2)"), v)
    assert joint == pytest.approx(0)
    assert product == pytest.approx(0.25)


@pytest.mark.parametrize("text", ["1|2,3", "1,2|3", "2|1,3"])
@pytest.mark.parametrize("max_degree", [2, 4])
def test_vacuum_is_separable_everywhere(text, max_degree):
    verdict = correlation_oracle(vacuum(3, Statistics.BOSE), ModeBipartition.parse(text), max_degree)
    assert verdict.separable


def test_oracle_rejects_small_degree():
    with pytest.raises(ValueError):
        correlation_oracle(bose_pair(), ModeBipartition.parse("1|2"), max_degree=1)


def test_oracle_rejects_indefinite_fermi_parity():
    v = FockVector(Statistics.FERMI, 2, {(1, 0): 1 / np.sqrt(2), (0, 1): 1 / np.sqrt(2)})
    with pytest.raises(FermiParityIndefiniteError):
        correlation_oracle(v, ModeBipartition.parse("1|2"))


def test_oracle_budget():
    with pytest.raises(BudgetExceededError):
        correlation_oracle(bose_pair(), ModeBipartition.parse("1|2"), max_degree=4, max_pairs=10)


def test_fermi_line_state_witness():
    # mode 1 always occupied, modes 2 and 3 share one particle
    v = FockVector(Statistics.FERMI, 3, {(1, 1, 0): 1 / np.sqrt(2), (1, 0, 1): 1 / np.sqrt(2)})
    bipartition = ModeBipartition.parse("1|2,3")
    verdict = correlation_oracle(v, bipartition)
    assert verdict.separable
    assert search_witness(v, ModeBipartition.parse("1,2|3")) is not None


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_rank_test_and_oracle_agree_on_random_states(statistics):
    states, bipartitions = random_separability_batch(statistics, 200, seed=17)
    comparison = DeciderComparison(RankDecider(), CorrelationOracleDecider(max_degree=4), verbose=True)
    outcomes = comparison.compare_all(states, bipartitions)
    assert comparison.disagreements(outcomes) == []
    separable = [outcome.first.separable for outcome in outcomes]
    assert any(separable) and not all(separable)

    for v, outcome in zip(states, outcomes):
        if outcome.first.separable:
            assert outcome.first.certificate.fidelity(v) >= 1 - 1e-9
        else:
            assert abs(outcome.first.witness.recompute(v)) > 1e-9


def test_comparison_dataframe_and_disagreements():
    comparison = DeciderComparison(RankDecider(), ConstantDecider(True))
    states = [bose_pair(), vacuum_superposition()]
    bipartitions = [ModeBipartition.parse("1|2")] * 2
    outcomes = comparison.compare_all(states, bipartitions)
    assert [outcome.index for outcome in comparison.disagreements(outcomes)] == [1]
    df = comparison.to_dataframe(outcomes)
    assert list(df.columns) == ["index", "bipartition", "RankDecider", "ConstantDecider", "agree"]
    assert df["agree"].tolist() == [True, False]


def test_comparison_rejects_length_mismatch():
    comparison = DeciderComparison(RankDecider(), RankDecider())
    with pytest.raises(ValueError):
        comparison.compare_all([bose_pair()], [])


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_complex_product_state_is_separable(statistics):
    # (ad(1) + i ad(2)) ad(3) |0> / sqrt(2): <ad(1) a(2)> is imaginary
    v = FockVector(statistics, 3, {(1, 0, 1): 1 / np.sqrt(2), (0, 1, 1): 1j / np.sqrt(2)})
    bipartition = ModeBipartition.parse("1,2|3")
    assert mode_separability_rank(v, bipartition).separable
    verdict = correlation_oracle(v, bipartition)
    assert verdict.separable
    assert verdict.certificate.fidelity(v) == pytest.approx(1)


def test_witness_matches_recomputed_defect_on_complex_state():
    v = FockVector(Statistics.BOSE, 2, {(1, 0): 1 / np.sqrt(2), (0, 1): 1j / np.sqrt(2)})
    witness = correlation_oracle(v, ModeBipartition.parse("1|2")).witness
    assert witness.recompute(v) == pytest.approx(witness.joint - witness.product, abs=1e-12)
    assert abs(witness.recompute(v)) > 1e-9


def test_low_degree_separable_verdict_carries_no_certificate(caplog):
    # block transfers |2,0> <-> |0,2> need degree 4, diagonal statistics are uncorrelated
    half = 0.5
    v = FockVector(
        Statistics.BOSE,
        4,
        {(2, 0, 2, 0): half, (2, 0, 0, 2): half, (0, 2, 2, 0): half, (0, 2, 0, 2): -half},
    )
    bipartition = ModeBipartition.parse("1,2|3,4")
    assert not mode_separability_rank(v, bipartition, find_witness=False).separable

    verdict = correlation_oracle(v, bipartition, max_degree=2)
    assert verdict.separable
    assert verdict.certificate is None
    assert "not rank one" in caplog.text

    assert not correlation_oracle(v, bipartition, max_degree=4).separable


def test_verbose_decider_logs_verdicts(caplog):
    caplog.set_level(logging.INFO, logger="fock-entanglement")
    RankDecider(verbose=True).decide(bose_pair(), ModeBipartition.parse("1|2"))
    assert "RankDecider on 1|2: separable" in caplog.text
    caplog.clear()
    RankDecider().decide(bose_pair(), ModeBipartition.parse("1|2"))
    assert caplog.text == ""


def test_fermi_odd_pairs_are_not_counted():
    v = bose_pair(Statistics.FERMI)
    bipartition = ModeBipartition.parse("1|2")
    # one mode per block: ad, a, ad*a on each side, of which 2 x 2 pairs are odd x odd
    assert search_witness(v, bipartition, max_degree=2, max_pairs=5) is None
    with pytest.raises(BudgetExceededError):
        search_witness(v, bipartition, max_degree=2, max_pairs=4)
    with pytest.raises(BudgetExceededError):
        search_witness(bose_pair(), bipartition, max_degree=2, max_pairs=8)
