import json
import random

import pytest

from schubert.chains import (
    LabeledChain,
    chain_from_json_obj,
    chain_monomial,
    chain_to_json_obj,
    chain_type,
    check_chain,
    count_by_type,
    increasing_chains,
    increasing_chains_to_w0,
    type_counts,
)
from schubert.perms import all_perms, labeled_edges, length, longest

CHAIN_1432 = LabeledChain(
    perms=((1, 4, 3, 2), (4, 1, 3, 2), (4, 2, 3, 1), (4, 3, 2, 1)),
    labels=((1, 1), (2, 1), (2, 2)),
)


def test_chain_monomial_worked_example():
    assert chain_monomial(CHAIN_1432) == (1, 2, 0)
    assert chain_type(CHAIN_1432) == (1, 2, 0)


def test_empty_chain():
    empty = LabeledChain(perms=((1, 2, 3),), labels=())
    assert chain_monomial(empty) == (0, 0)
    assert len(empty) == 0
    assert empty.start == empty.end


def test_exponent_sum_is_step_count():
    for chain in increasing_chains_to_w0((2, 1, 4, 3)):
        assert sum(chain_monomial(chain)) == len(chain)


def test_single_chain_when_endpoints_equal():
    chains = list(increasing_chains((2, 4, 1, 3), (2, 4, 1, 3)))
    assert chains == [LabeledChain(perms=((2, 4, 1, 3),), labels=())]


def test_empty_stream_when_not_below():
    assert list(increasing_chains((2, 4, 1, 3), (1, 3, 2, 4))) == []
    # same length, distinct: incomparable
    assert list(increasing_chains((2, 1, 4, 3), (1, 3, 4, 2))) == []


def test_known_chain_appears():
    chains = list(increasing_chains((1, 4, 3, 2), (4, 3, 2, 1)))
    assert CHAIN_1432 in chains
    assert CHAIN_1432 in list(increasing_chains_to_w0((1, 4, 3, 2)))


def test_chain_count_for_1324_to_2413():
    # equals the coefficient sum of the skew polynomial; frozen from the
    # normal-form route (see test_calc.test_skew_coefficient_sum_oracle)
    chains = list(increasing_chains((1, 3, 2, 4), (2, 4, 1, 3)))
    assert len(chains) == 4


def test_every_emitted_chain_is_valid_and_increasing():
    for w in [(1, 4, 3, 2), (2, 1, 4, 3), (1, 2, 3, 4)]:
        for chain in increasing_chains((1, 2, 3, 4), w):
            check_chain(chain)
            assert chain.is_increasing()
            assert chain.start == (1, 2, 3, 4)
            assert chain.end == w


def test_deterministic_lexicographic_order():
    runs = [
        [c.labels for c in increasing_chains((1, 4, 3, 2), (4, 3, 2, 1))]
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    assert runs[0] == sorted(runs[0])


def test_to_w0_trivial_cases():
    w0 = longest(4)
    assert list(increasing_chains_to_w0(w0)) == [LabeledChain((w0,), ())]


def test_to_w0_count_matches_brute_force_rcgraphs():
    from oracles import brute_force_rcgraphs

    for w in [(1, 4, 3, 2), (2, 1, 4, 3), (3, 1, 2, 4)]:
        assert len(list(increasing_chains_to_w0(w))) == len(brute_force_rcgraphs(w))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_specialized_equals_generic(n):
    w0 = longest(n)
    for w in all_perms(n):
        special = {c.labels for c in increasing_chains_to_w0(w)}
        generic = {c.labels for c in increasing_chains(w, w0)}
        assert special == generic, w
        assert len(special) == sum(1 for _ in increasing_chains_to_w0(w))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_star_property_and_branch_consistency(n):
    # every step in a chain to w0 swaps position k of its label, and all
    # branches at a node share the same label
    for w in all_perms(n):
        for chain in increasing_chains_to_w0(w):
            for u, v, (k, b) in zip(chain.perms, chain.perms[1:], chain.labels):
                diff = [p for p in range(n) if u[p] != v[p]]
                assert diff[0] == k - 1
                assert u[k - 1] == b
                assert (k, b) in labeled_edges(u, v)


def test_count_by_type():
    u, w0 = (1, 4, 3, 2), (4, 3, 2, 1)
    assert count_by_type(u, u, (0, 0, 0)) == 1
    assert count_by_type(u, u, (1, 0, 0)) == 0
    assert count_by_type(u, w0, (1, 2, 0)) == 1  # the example chain is the only one
    counts = type_counts(u, w0)
    assert sum(counts.values()) == len(list(increasing_chains(u, w0)))
    assert counts[(1, 2, 0)] == 1


def test_type_partition_of_total():
    u, w = (1, 3, 2, 4), (2, 4, 1, 3)
    counts = type_counts(u, w)
    assert sum(counts.values()) == 4
    assert all(len(a) == 3 for a in counts)


def test_label_sequences_within_fixed_endpoints_are_distinct():
    # distinct walks between the same endpoints never share a label sequence
    # (checked exhaustively at n = 4); labels alone remain ambiguous only
    # across different endpoints
    for u in all_perms(4):
        for w in all_perms(4):
            if not 0 < length(w) - length(u) <= 3:
                continue
            seqs = [c.labels for c in increasing_chains(u, w)]
            assert len(seqs) == len(set(seqs)), (u, w)


def test_chain_json_round_trip():
    obj = chain_to_json_obj(CHAIN_1432)
    assert obj == {"start": "1432", "steps": [[1, 1], [2, 1], [2, 2]]}
    assert json.loads(json.dumps(obj)) == obj
    assert chain_from_json_obj(obj) == CHAIN_1432


def test_chain_json_ambiguity_detected():
    # 1324 has two covers labeled (1, 1): to 3124 and to 2314
    with pytest.raises(ValueError, match="2 distinct chains"):
        chain_from_json_obj({"start": "1324", "steps": [[1, 1]]})
    # the label (1, 2) requires value 2 at a position <= 1, impossible here
    with pytest.raises(ValueError, match="no chain"):
        chain_from_json_obj({"start": "1234", "steps": [[1, 2]]})


def test_chain_json_round_trip_all_outputs_n4():
    for w in all_perms(4):
        for chain in increasing_chains_to_w0(w):
            assert chain_from_json_obj(chain_to_json_obj(chain)) == chain


def test_chain_json_endpoint_hint():
    one_step = next(increasing_chains((1, 3, 2, 4), (3, 1, 2, 4)))
    obj = chain_to_json_obj(one_step)
    assert obj["steps"] == [[1, 1]]
    assert chain_from_json_obj(obj, end=(3, 1, 2, 4)) == one_step
    other = next(increasing_chains((1, 3, 2, 4), (2, 3, 1, 4)))
    assert chain_from_json_obj(chain_to_json_obj(other), end=(2, 3, 1, 4)) == other


def test_type_counts_from_identity_match_complement():
    # Gamma(1, w) and Gamma(w0 w, w0) carry identical type distributions,
    # even though no explicit bijection between them is implemented
    from schubert.perms import compose, identity

    for w in all_perms(4):
        w0w = compose(longest(4), w)
        assert type_counts(identity(4), w) == type_counts(w0w, longest(4)), w


def test_random_to_w0_chains_verify_in_s5():
    rng = random.Random(1)
    perms = list(all_perms(5))
    for w in rng.sample(perms, 10):
        for chain in increasing_chains_to_w0(w):
            check_chain(chain)
            assert chain.is_increasing()
