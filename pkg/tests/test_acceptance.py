"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]`` or ``[FAIL]`` line (visible in normal pytest
output) before asserting.  Run just this file with::

    pytest tests/test_acceptance.py -v

or directly with ``python -m tests.test_acceptance`` for the bare summary lines.
"""

import math
import random
import subprocess
import sys

import networkx as nx
import pytest

from pathchrom.coloring import chromatic_number, chromatic_number_mask, enumerate_colorings
from pathchrom.constructions import (
    block,
    embed_into_block,
    mu_enumeration,
    mycielski,
    mycielski_embedding,
    r_product,
    star_decomposition_rm_cycle,
)
from pathchrom.decomposition import (
    decomposition_chromatic_number,
    enumeration_chromatic_number,
    enumeration_from_path_decomposition,
    validate,
)
from pathchrom.dp import (
    brute_force_path_chromatic,
    brute_force_special_enumerations,
    exists_special_enumeration,
    path_chromatic_number,
)
from pathchrom.generators import random_graph, random_path_decomposition
from pathchrom.graph import check_induced_embedding, induced_subgraph, is_triangle_free, make_complete, make_cycle

from .conftest import from_nx, literal_bags, to_nx


class _Announcer:
    def __init__(self, capsys=None):
        self.capsys = capsys

    def __call__(self, number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
        if self.capsys is None:
            print(line)
        else:
            with self.capsys.disabled():
                print("\n" + line)
        assert ok, line


@pytest.fixture
def announce(capsys):
    return _Announcer(capsys)


def _bipartite_bags(G, order):
    """Every bag of the enumeration's path-decomposition is 2-colorable (networkx check)."""
    H = to_nx(G)
    return all(nx.is_bipartite(H.subgraph(b)) for b in literal_bags(G, order))


def test_criterion_01_dp_matches_brute_force(announce):
    small = [from_nx(H) for H in nx.graph_atlas_g()[1:] if H.number_of_nodes() <= 6 and nx.is_connected(H)]
    rng = random.Random(0)
    seven = [random_graph(7, 0.5, rng) for _ in range(200)]
    mismatches = [G.edges() for G in small + seven if path_chromatic_number(G).answer != brute_force_path_chromatic(G)]
    announce(
        1,
        "path_chromatic_number equals brute force",
        len(small) == 143 and not mismatches,
        f"{len(small)} connected graphs on <=6 vertices + {len(seven)} random 7-vertex graphs, "
        f"{len(mismatches)} mismatches",
    )


def test_criterion_02_odd_cycles_have_no_special_enumeration(announce):
    rows = []
    ok = True
    for n in (5, 7):
        G = make_cycle(n)
        dp_answer = exists_special_enumeration(G).answer
        total, found = brute_force_special_enumerations(G, 2)
        ok &= dp_answer is None and total == math.factorial(n) and not found
        rows.append(f"C_{n}: DP none={dp_answer is None}, {total} orderings, {len(found)} special")
    announce(2, "no special enumeration of C_5 or C_7", ok, "; ".join(rows))


def test_criterion_03_cycles_have_path_chromatic_number_two(announce):
    values = {n: path_chromatic_number(make_cycle(n)).answer for n in (5, 7, 9)}
    announce(3, "path-chromatic number of C_5, C_7, C_9 is 2", all(v == 2 for v in values.values()), str(values))


def test_criterion_04_star_decomposition(announce):
    R = r_product(make_cycle(5), 9).graph
    D = star_decomposition_rm_cycle(5, 9)
    report = validate(R, D)
    chi = decomposition_chromatic_number(R, D) if report else None
    announce(
        4,
        "star decomposition of R_9(C_5) is valid with chromatic number 2",
        R.n == 54 and bool(report) and chi == 2,
        f"{R.n} vertices, {D.nodes} bags, {report.describe()}, chi={chi}",
    )


def test_criterion_05_row_major_enumeration(announce):
    G = make_cycle(5)
    R = r_product(G, 9).graph
    mu = mu_enumeration(G, range(5), 9)
    bags = literal_bags(R, mu)
    chis = [chromatic_number_mask(R.adj, R.mask_of(b)) for b in bags]
    ok = len(bags) == 54 and max(chis) <= 3
    reduced = {}
    for m in (1, 2, 3, 4):
        small = r_product(G, m).graph
        r = path_chromatic_number(small)
        upper = enumeration_chromatic_number(small, mu_enumeration(G, range(5), m))
        ok &= enumeration_chromatic_number(small, r.witness) == r.answer and 2 <= r.answer <= upper
        reduced[m] = r.answer
    ok &= reduced[1] == brute_force_path_chromatic(r_product(G, 1).graph)
    announce(
        5,
        "row-major enumeration of R_9(C_5) has bags of chromatic number <= 3",
        ok,
        f"{len(bags)} bags, max chi={max(chis)}; exact chi_P(R_m(C_5)) for m=1..4: {reduced}; "
        "chi_P(R_9(C_5)) >= 3 skipped: 2^54 DP states",
    )


def test_criterion_06_k2_rows(announce):
    R = r_product(make_complete(2), 6).graph
    r = path_chromatic_number(R)
    ok = R.n == 18 and r.answer == 2 and sorted(r.witness) == list(range(18)) and _bipartite_bags(R, r.witness)
    ok &= exists_special_enumeration(make_complete(2)).answer is not None
    announce(6, "path-chromatic number of R_6(K_2) is 2", ok, f"DP value {r.answer}, witness re-validated")


def test_criterion_07_connectivity(announce):
    from pathchrom.graph import vertex_connectivity

    R = r_product(make_cycle(5), 9).graph
    kappa = vertex_connectivity(R)
    reference = nx.node_connectivity(to_nx(R))
    announce(7, "R_9(C_5) is 5-connected", kappa >= 5 and kappa == reference, f"kappa={kappa}, networkx={reference}")


def test_criterion_08_mycielski(announce):
    rows = []
    ok = True
    for k in (2, 3, 4, 5):
        M = mycielski(k).graph
        chi = chromatic_number(M)
        good = M.n == 3 * 2 ** (k - 2) - 1 and is_triangle_free(M) and chi == k
        ok &= good
        rows.append(f"M_{k}: n={M.n}, chi={chi}")
    ok &= nx.is_isomorphic(to_nx(mycielski(3).graph), to_nx(make_cycle(5)))
    announce(8, "Mycielski orders, triangle-freeness, chromatic numbers, M_3 = C_5", ok, "; ".join(rows))


def test_criterion_09_mycielski_embedding(announce):
    cases = [(2, 2, 4), (2, 3, 5), (3, 2, 5), (3, 3, 6)]
    results = {
        c: check_induced_embedding(r_product(mycielski(c[0]).graph, c[1]).graph, mycielski(c[2]).graph,
                                   mycielski_embedding(*c))
        for c in cases
    }
    announce(9, "R_m(M_n) embeds as an induced subgraph of M_r", all(results.values()), str(results))


def test_criterion_10_blocks(announce):
    G = make_cycle(5)
    R = r_product(G, 4)
    f = embed_into_block(G, range(5), [1, 2, 3])
    H, back = induced_subgraph(G, range(5))
    ok = check_induced_embedding(H, R.graph, [R.index(f[v]) for v in back])
    chis = {}
    for rows in (3, 4):
        B = block(R, range(1, rows + 1), range(5))
        chis[rows] = chromatic_number_mask(R.graph.adj, R.graph.mask_of(B))
    ok &= chis == {3: 3, 4: 3}
    colorings = 0
    deficient = 0
    for col in enumerate_colorings(R.graph, 3, block(R, range(1, 5), range(5))):
        colorings += 1
        deficient += sum(len({col[R.vertex(i, v)] for v in range(5)}) < 3 for i in range(1, 5))
    ok &= colorings > 0 and deficient == 0
    announce(
        10,
        "C_5 embeds in a 3-row block; block chromatic number 3; every row uses all colors",
        ok,
        f"block chi {chis}; {colorings} proper 3-colorings of the 20-vertex block, {deficient} deficient rows",
    )


def test_criterion_11_conversion(announce):
    rng = random.Random(0)
    worse = 0
    for _ in range(500):
        n = rng.randint(1, 6)
        G = random_graph(n, rng.choice([0.3, 0.5, 0.7]), rng)
        D = random_path_decomposition(G, rng)
        order = enumeration_from_path_decomposition(G, D)
        worse += enumeration_chromatic_number(G, order) > decomposition_chromatic_number(G, D)
    announce(11, "last-bag ordering never raises the chromatic number", worse == 0, f"500 decompositions, {worse} worse")


def test_criterion_12_determinism(announce, tmp_path):
    outputs = []
    codes = []
    for i in range(2):
        target = tmp_path / f"run{i}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "pathchrom", "verify", "all", "--out", str(target)],
            capture_output=True,
            check=False,
        )
        codes.append(proc.returncode)
        outputs.append(target.read_bytes() if target.exists() else b"")
    ok = codes == [0, 0] and outputs[0] == outputs[1] and len(outputs[0]) > 0
    announce(12, "'verify all' twice gives byte-identical reports", ok, f"exit codes {codes}, {len(outputs[0])} bytes")


if __name__ == "__main__":
    import inspect
    import tempfile
    from pathlib import Path

    failed = 0
    for name, fn in sorted(globals().items()):
        if not name.startswith("test_criterion_"):
            continue
        kwargs = {"announce": _Announcer()}
        if "tmp_path" in inspect.signature(fn).parameters:
            kwargs["tmp_path"] = Path(tempfile.mkdtemp())
        try:
            fn(**kwargs)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
