import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathchrom.coloring import ColorOracle, chromatic_number
from pathchrom.constructions import mycielski, r_product
from pathchrom.decomposition import (
    enumeration_bag_masks,
    enumeration_chromatic_number,
    is_special_enumeration,
    path_decomposition_from_enumeration,
)
from pathchrom import dp
from pathchrom.dp import (
    MAX_DP_VERTICES,
    bag_of_prefix,
    brute_force_path_chromatic,
    brute_force_special_enumerations,
    exists_special_enumeration,
    path_chromatic_at_most,
    path_chromatic_number,
    resolve_engine,
)
from pathchrom.errors import InvalidParameterError, SizeLimitError
from pathchrom.graph import Graph, make_complete, make_cycle, make_empty, make_path

from .conftest import graphs, graphs_with_enumeration


class TestBagOfPrefix:
    def test_examples(self):
        assert bag_of_prefix(make_complete(2), {0}, 0) == {0, 1}
        assert bag_of_prefix(make_cycle(5), {0, 1}, 1) == {1, 2, 4}

    def test_vertex_outside_prefix(self):
        with pytest.raises(InvalidParameterError):
            bag_of_prefix(make_cycle(5), {0, 1}, 3)

    @given(graphs_with_enumeration(max_n=6))
    def test_agrees_with_enumeration_bags(self, inst):
        G, order = inst
        P = path_decomposition_from_enumeration(G, order)
        for ell in range(G.n):
            assert bag_of_prefix(G, order[: ell + 1], order[ell]) == P.bags[ell]


class TestAtMost:
    def test_c5(self):
        r = path_chromatic_at_most(make_cycle(5), 2)
        assert r.answer is True
        assert enumeration_chromatic_number(make_cycle(5), r.witness) <= 2

    def test_k4(self):
        assert path_chromatic_at_most(make_complete(4), 3).answer is False
        assert path_chromatic_at_most(make_complete(4), 4).answer is True

    def test_nonpositive_k(self):
        assert path_chromatic_at_most(make_empty(1), 0).answer is False
        assert path_chromatic_at_most(Graph.from_edges(0, []), 0).answer is True

    def test_no_witness_requested(self):
        assert path_chromatic_at_most(make_cycle(5), 2, want_witness=False).witness is None

    @given(graphs(min_n=1, max_n=7))
    @settings(max_examples=80)
    def test_monotone_in_k(self, G):
        answers = [path_chromatic_at_most(G, k, want_witness=False).answer for k in range(0, G.n + 2)]
        first = answers.index(True)
        assert all(answers[first:])
        assert not any(answers[:first])


class TestPathChromaticNumber:
    @pytest.mark.parametrize(
        "G, expected",
        [
            (Graph.from_edges(0, []), 0),
            (make_complete(1), 1),
            (make_empty(3), 1),
            (make_path(4), 2),
            (make_cycle(5), 2),
            (make_cycle(8), 2),
            (make_complete(5), 5),
        ],
    )
    def test_examples(self, G, expected):
        r = path_chromatic_number(G)
        assert r.answer == expected
        assert len(r.witness) == G.n
        assert enumeration_chromatic_number(G, r.witness) == expected

    def test_m4_witness_revalidates(self):
        M4 = mycielski(4).graph
        r = path_chromatic_number(M4)
        assert r.answer in (2, 3, 4)
        assert enumeration_chromatic_number(M4, r.witness) == r.answer
        assert brute_force_path_chromatic(mycielski(3).graph) == 2

    def test_max_k_stops_early(self):
        r = path_chromatic_number(make_complete(4), max_k=2)
        assert r.answer is None and r.witness is None

    def test_size_guard(self, monkeypatch):
        with pytest.raises(SizeLimitError):
            path_chromatic_number(make_empty(MAX_DP_VERTICES + 1))
        monkeypatch.setattr(dp, "MAX_DP_VERTICES", 4)
        with pytest.raises(SizeLimitError):
            exists_special_enumeration(make_cycle(5))
        assert path_chromatic_number(make_cycle(5), size_override=True).answer == 2

    @given(graphs(max_n=7))
    @settings(max_examples=150)
    def test_matches_brute_force(self, G):
        assert path_chromatic_number(G).answer == brute_force_path_chromatic(G)

    @given(graphs(max_n=8))
    def test_bounded_by_chromatic_number(self, G):
        r = path_chromatic_number(G)
        assert r.answer <= chromatic_number(G)
        assert enumeration_chromatic_number(G, r.witness) == r.answer

    def test_report_serialises(self):
        d = path_chromatic_number(make_cycle(5)).to_dict()
        assert d["answer"] == 2 and "elapsed" not in d
        assert set(d["per_k"]) == {"2"}


class TestBruteForce:
    def test_examples(self):
        assert brute_force_path_chromatic(make_cycle(5)) == 2
        assert brute_force_path_chromatic(make_complete(3)) == 3
        assert brute_force_path_chromatic(Graph.from_edges(0, [])) == 0

    def test_size_guard(self):
        with pytest.raises(SizeLimitError):
            brute_force_path_chromatic(make_empty(10))

    def test_special_counts(self):
        total, found = brute_force_special_enumerations(make_complete(2), 2)
        assert total == 2 and sorted(found) == [(0, 1), (1, 0)]


class TestSpecialSearch:
    def test_k2(self):
        r = exists_special_enumeration(make_complete(2))
        assert r.answer in ((0, 1), (1, 0))
        assert r.per_k["special"] == {"k": 2, "feasible": True, "states": r.per_k["special"]["states"]}

    @pytest.mark.parametrize("n", [5, 7])
    def test_odd_cycles_have_none(self, n):
        assert exists_special_enumeration(make_cycle(n)).answer is None

    def test_empty_graph(self):
        assert exists_special_enumeration(Graph.from_edges(0, [])).answer == ()

    @given(graphs(min_n=1, max_n=6))
    @settings(max_examples=80)
    def test_matches_exhaustive_search(self, G):
        k = path_chromatic_number(G).answer
        r = exists_special_enumeration(G, k=k)
        _, found = brute_force_special_enumerations(G, k)
        assert (r.answer is not None) == bool(found)
        if r.answer is not None:
            assert is_special_enumeration(G, r.answer, k)


class TestEngines:
    def test_resolve(self):
        assert resolve_engine("python", 30) == "python"
        assert resolve_engine("numba", 3) == "numba"
        with pytest.raises(InvalidParameterError):
            resolve_engine("gpu", 3)

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("PATHCHROM_ENGINE", "python")
        assert resolve_engine("auto", 20) == "python"
        monkeypatch.delenv("PATHCHROM_ENGINE")
        assert resolve_engine("auto", 20) == "numba"
        assert resolve_engine("auto", 10) == "python"

    @given(graphs(min_n=1, max_n=9), st.booleans())
    @settings(max_examples=60)
    def test_same_states_and_witness(self, G, special):
        if special:
            k = path_chromatic_number(G, engine="python").answer
            a = exists_special_enumeration(G, k=k, engine="python")
            b = exists_special_enumeration(G, k=k, engine="numba")
        else:
            a = path_chromatic_number(G, engine="python")
            b = path_chromatic_number(G, engine="numba")
        assert a.answer == b.answer and a.witness == b.witness
        assert a.states_explored == b.states_explored

    def test_rm_cycle_python_engine_rejects_two(self):
        R = r_product(make_cycle(5), 4).graph
        a = path_chromatic_at_most(R, 2, engine="python")
        b = path_chromatic_at_most(R, 2, engine="numba")
        assert a.answer is False and b.answer is False
        assert a.states_explored == b.states_explored


@pytest.mark.parametrize(
    "G, m",
    [(make_complete(2), 2), (make_complete(2), 4), (make_path(3), 3), (make_complete(3), 3), (make_cycle(5), 3)],
)
def test_row_product_does_not_lower_path_chromatic_number(G, m):
    # m >= chi(G) rows are enough to hold an induced copy of G
    R = r_product(G, m).graph
    assert path_chromatic_number(R).answer >= path_chromatic_number(G).answer


def test_too_few_rows_can_lower_the_value():
    assert path_chromatic_number(r_product(make_complete(3), 2).graph).answer == 2
    assert path_chromatic_number(r_product(make_complete(4), 3).graph).answer == 3


def test_k2_row_product_keeps_two():
    R = r_product(make_complete(2), 6).graph
    r = path_chromatic_number(R)
    assert r.answer == 2
    assert enumeration_chromatic_number(R, r.witness) == 2


def test_first_appearance_order_on_k2_rows():
    """For every enumeration mu of R_3(K_2): the base order given by first
    appearances has bags no more chromatic than mu's, and when one of them reaches
    mu's value, at most that many apexes precede the corresponding first copy."""
    base = make_complete(2)
    R = r_product(base, 3)
    G = R.graph
    apex = {x for x in G.vertices if R.labels[x].base is None}
    oracle, base_oracle = ColorOracle(G), ColorOracle(base)
    tight = 0
    for mu in itertools.permutations(G.vertices):
        k = max(oracle.chi(b) for b in enumeration_bag_masks(G, mu))
        first = {}
        for pos, x in enumerate(mu):
            first.setdefault(R.labels[x].base, pos)
        first.pop(None, None)
        sigma = sorted(first, key=first.get)
        chis = [base_oracle.chi(b) for b in enumeration_bag_masks(base, sigma)]
        assert max(chis) <= k
        for v, c in zip(sigma, chis):
            if c == k:
                tight += 1
                assert sum(1 for x in mu[: first[v] + 1] if x in apex) <= k
    assert tight > 0
