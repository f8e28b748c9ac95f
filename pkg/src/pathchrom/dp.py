"""Subset dynamic programming for the path-chromatic number.

The bag entered by the ``l``-th vertex of an enumeration depends only on the
set ``S`` of the first ``l`` vertices and on which of them came last::

    bag(S, v) = N[S] - (S - {v})

so ``chi_P(G) <= k`` iff the full vertex set is reachable from the empty set by
adding one vertex at a time, each step producing a bag of chromatic number at
most ``k``.  The search sweeps prefixes in layers of equal size and keeps one
byte per subset to mark the feasible ones; witnesses are recovered afterwards by
walking back from ``V(G)`` and re-checking predecessors.
"""

from __future__ import annotations

import itertools
import logging
import os
import time
from dataclasses import dataclass, field
from .coloring import ColorOracle
from .decomposition import enumeration_bag_masks, is_special_enumeration
from .errors import InvalidParameterError, SizeLimitError
from .graph import Graph, members

log = logging.getLogger(__name__)

MAX_DP_VERTICES = 28
MAX_BRUTE_FORCE_VERTICES = 9


@dataclass
class DpReport:
    answer: bool | int
    witness: tuple[int, ...] | None
    states_explored: int = 0
    bag_cache_hits: int = 0
    elapsed: float = 0.0
    per_k: dict = field(default_factory=dict)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "answer": self.answer,
            "witness": None if self.witness is None else list(self.witness),
            "states_explored": self.states_explored,
            "bag_cache_hits": self.bag_cache_hits,
        }
        if self.per_k:
            out["per_k"] = {str(k): v for k, v in sorted(self.per_k.items())}
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def bag_of_prefix(G: Graph, S, v: int) -> frozenset:
    """The bag produced when ``v`` is the last vertex of the prefix ``S``."""
    mask = G.mask_of(S)
    if not mask >> v & 1:
        raise InvalidParameterError(f"vertex {v} is not in the prefix")
    return frozenset(members(G.neighborhood_mask(mask) & ~(mask & ~(1 << v))))


def _guard(G: Graph, size_override: bool):
    if G.n > MAX_DP_VERTICES and not size_override:
        raise SizeLimitError(
            f"{G.n} vertices exceeds the DP limit of {MAX_DP_VERTICES}; pass size_override to force"
        )


def _numba_sweep():
    try:
        from . import _kernel
    except ImportError:  # numba missing: pure-Python engine only
        return None
    return _kernel.sweep


def resolve_engine(engine: str, n: int) -> str:
    """``auto`` picks the compiled sweep for graphs where it pays off."""
    if engine not in ("auto", "python", "numba"):
        raise InvalidParameterError(f"unknown engine {engine!r}")
    if engine == "auto":
        engine = os.environ.get("PATHCHROM_ENGINE", "auto")
    if engine == "auto":
        return "numba" if n >= 16 and _numba_sweep() is not None else "python"
    if engine == "numba" and _numba_sweep() is None:
        raise InvalidParameterError("numba engine requested but numba is not importable")
    return engine


class _Search:
    """One layered sweep over prefixes.

    A step appends ``v`` to the prefix ``S``.  It is allowed when the new bag has
    chromatic number at most ``k``; with ``special`` it must be at most ``k - 1``
    unless ``v`` has no neighbor in ``S``.
    """

    def __init__(self, G: Graph, k: int, special: bool, oracle: ColorOracle, engine: str = "auto"):
        self.G = G
        self.k = k
        self.special = special
        self.engine = resolve_engine(engine, G.n)
        self.hits = [0]
        self.within = _cached_at_most(oracle, k, self.hits)
        self.below = _cached_at_most(oracle, k - 1, self.hits)
        self.feasible = bytearray(1 << G.n)
        self.states = 0

    def step(self, S: int, v: int, bag: int) -> bool:
        if not self.special:
            return self.within(bag)
        if self.below(bag):
            return True
        return not (self.G.adj[v] & S) and self.within(bag)

    def run(self) -> bool:
        if self.engine == "numba":
            return self._run_compiled()
        n = self.G.n
        full = (1 << n) - 1
        closed = [self.G.adj[v] | (1 << v) for v in range(n)]
        feasible = self.feasible
        step = self.step
        bits = [1 << v for v in range(n)]
        feasible[0] = 1
        self.states = 1
        layer = [(0, 0)]
        for _ in range(n):
            nxt = []
            for S, NS in layer:
                for v in range(n):
                    b = bits[v]
                    if S & b:
                        continue
                    T = S | b
                    if feasible[T]:
                        continue
                    NT = NS | closed[v]
                    if step(S, v, NT & ~S):
                        feasible[T] = 1
                        nxt.append((T, NT))
            self.states += len(nxt)
            layer = nxt
            if not layer:
                break
        return bool(feasible[full])

    def _run_compiled(self) -> bool:
        import numpy as np

        adj = np.array(self.G.adj, dtype=np.int64)
        feasible = np.zeros(1 << self.G.n, dtype=np.uint8)
        states, hits = _numba_sweep()(adj, self.k, self.special, feasible)
        self.feasible = feasible
        self.states = int(states)
        self.hits[0] += int(hits)
        return bool(feasible[-1])

    def witness(self) -> tuple[int, ...]:
        G = self.G
        S = G.full_mask
        order = []
        while S:
            # predecessor P = S - v must be feasible and the step into S allowed
            NS = G.neighborhood_mask(S)
            for v in members(S):
                P = S & ~(1 << v)
                if self.feasible[P] and self.step(P, v, NS & ~P):
                    order.append(v)
                    S = P
                    break
            else:
                raise AssertionError("feasible state without a feasible predecessor")
        return tuple(reversed(order))


def _cached_at_most(oracle: ColorOracle, k: int, counter: list[int]):
    local: dict[int, bool] = {}
    at_most = oracle.at_most

    def check(bag: int) -> bool:
        r = local.get(bag)
        if r is None:
            r = local[bag] = at_most(bag, k)
        else:
            counter[0] += 1
        return r

    return check


def path_chromatic_at_most(
    G: Graph,
    k: int,
    *,
    want_witness: bool = True,
    oracle: ColorOracle | None = None,
    size_override: bool = False,
    engine: str = "auto",
) -> DpReport:
    """Decide ``chi_P(G) <= k``; on success the report carries a witness enumeration."""
    _guard(G, size_override)
    t0 = time.perf_counter()
    if G.n == 0:
        return DpReport(True, (), 1, 0, time.perf_counter() - t0)
    if k < 1:
        return DpReport(False, None, 1, 0, time.perf_counter() - t0)
    oracle = oracle or ColorOracle(G)
    search = _Search(G, k, False, oracle, engine)
    answer = search.run()
    witness = search.witness() if answer and want_witness else None
    elapsed = time.perf_counter() - t0
    log.debug("chi_P <= %d on n=%d: %s (%d states, %.2fs)", k, G.n, answer, search.states, elapsed)
    return DpReport(answer, witness, search.states, search.hits[0], elapsed)


def _lower_bound(G: Graph) -> int:
    if G.n == 0:
        return 0
    return 2 if any(G.adj) else 1


def path_chromatic_number(
    G: Graph,
    *,
    oracle: ColorOracle | None = None,
    size_override: bool = False,
    max_k: int | None = None,
    engine: str = "auto",
) -> DpReport:
    """Exact ``chi_P(G)`` with a witness enumeration attaining it.

    ``k`` increases from a trivial lower bound, so colorability facts learned at
    one value are reused at the next through the shared oracle.  With ``max_k``
    the search stops early and the answer is ``None`` if ``chi_P(G) > max_k``.
    """
    _guard(G, size_override)
    t0 = time.perf_counter()
    if G.n == 0:
        return DpReport(0, (), 1, 0, time.perf_counter() - t0)
    oracle = oracle or ColorOracle(G)
    states = hits = 0
    per_k = {}
    k = _lower_bound(G)
    while True:
        if max_k is not None and k > max_k:
            return DpReport(None, None, states, hits, time.perf_counter() - t0, per_k)
        r = path_chromatic_at_most(G, k, oracle=oracle, size_override=size_override, engine=engine)
        states += r.states_explored
        hits += r.bag_cache_hits
        per_k[k] = {"feasible": r.answer, "states": r.states_explored}
        if r.answer:
            return DpReport(k, r.witness, states, hits, time.perf_counter() - t0, per_k)
        k += 1


def exists_special_enumeration(
    G: Graph,
    *,
    k: int | None = None,
    oracle: ColorOracle | None = None,
    size_override: bool = False,
    engine: str = "auto",
) -> DpReport:
    """Search for a special enumeration of ``G``.

    The answer is the witness enumeration or ``None``; ``k`` (the path-chromatic
    number) is computed first unless supplied.
    """
    _guard(G, size_override)
    t0 = time.perf_counter()
    if G.n == 0:
        return DpReport((), (), 1, 0, time.perf_counter() - t0)
    oracle = oracle or ColorOracle(G)
    states = hits = 0
    per_k = {}
    if k is None:
        base = path_chromatic_number(G, oracle=oracle, size_override=size_override, engine=engine)
        k = base.answer
        states += base.states_explored
        hits += base.bag_cache_hits
        per_k.update(base.per_k)
    search = _Search(G, k, True, oracle, engine)
    found = search.run()
    witness = search.witness() if found else None
    states += search.states
    hits += search.hits[0]
    per_k["special"] = {"k": k, "feasible": found, "states": search.states}
    return DpReport(witness, witness, states, hits, time.perf_counter() - t0, per_k)


def _brute_guard(G: Graph):
    if G.n > MAX_BRUTE_FORCE_VERTICES:
        raise SizeLimitError(f"brute force is limited to {MAX_BRUTE_FORCE_VERTICES} vertices, got {G.n}")


def brute_force_path_chromatic(G: Graph) -> int:
    """Minimum over all ``n!`` enumerations of the induced path-decomposition's
    chromatic number.  Independent of the subset DP; used as its oracle."""
    _brute_guard(G)
    if G.n == 0:
        return 0
    oracle = ColorOracle(G)
    floor = _lower_bound(G)
    best = G.n
    for order in itertools.permutations(range(G.n)):
        worst = 0
        for bag in enumeration_bag_masks(G, order):
            worst = max(worst, oracle.chi(bag))
            if worst >= best:
                break
        best = min(best, worst)
        if best == floor:
            break
    return best


def brute_force_special_enumerations(G: Graph, k: int):
    """Every special enumeration of ``G`` (``k`` must be ``chi_P(G)``), by exhaustion.

    Returns ``(number_of_enumerations_checked, list_of_special_enumerations)``.
    """
    _brute_guard(G)
    oracle = ColorOracle(G)
    found = []
    total = 0
    for order in itertools.permutations(range(G.n)):
        total += 1
        if is_special_enumeration(G, order, k, oracle):
            found.append(order)
    return total, found
