"""Exact minimum solver for all six domination variants.

The solver enumerates candidate sets in increasing size and, within a size,
in lexicographic order, returning the first certificate found.  That makes
the reported witness the lexicographically least minimum witness, so results
are bit-stable across runs.  Pruning (forced vertices, lower bounds, the
complete-graph shortcut) can be disabled to cross-check soundness.

Also houses the small-graph isomorphism-class enumerator and the seeded
random generators used as test corpora.

This is the ground-truth oracle: everything faster in the package is
validated against it at desk scale.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterator

import numpy as np

from .graph import DomainError, Graph
from .verify import (
    VARIANTS,
    is_connected_dominating,
    is_dominating,
    is_scds,
    is_secure_dominating,
    is_stds,
    is_total_dominating,
)

METHOD_EXACT = "exact_search"
METHOD_BLOCK = "block_formula"
METHOD_THRESHOLD = "threshold_formula"
METHOD_TRIVIAL = "trivial_complete"

DEFAULT_MAX_N = 20


@dataclass(frozen=True)
class SolveReport:
    """Result of a minimum-domination computation.

    nodes_explored counts candidate sets tested in the reported search
    (bound-estimation sub-solves are not included); elapsed is wall time
    in seconds.
    """

    variant: str
    value: int
    witness: frozenset[int]
    method: str
    elapsed: float
    nodes_explored: int


def _checker(variant: str) -> Callable[[Graph, frozenset[int]], bool]:
    if variant == "ds":
        return is_dominating
    if variant == "cds":
        return is_connected_dominating
    if variant == "tds":
        return is_total_dominating
    if variant == "sds":
        return is_secure_dominating
    if variant == "scds":
        return is_scds
    if variant == "stds":
        return lambda g, s: is_stds(g, s, exhaustive=False)[0]
    raise DomainError(f"unknown variant {variant!r}")


def solve(
    graph: Graph,
    variant: str,
    *,
    max_n: int | None = DEFAULT_MAX_N,
    use_pruning: bool = True,
) -> SolveReport:
    """Minimum certificate size and lexicographically least witness.

    Preconditions: n >= 1; connected input for cds/scds/stds; no isolated
    vertices for tds/stds.  Graphs larger than ``max_n`` are refused (the
    search is exponential); pass ``max_n=None`` to override.

    With ``use_pruning`` the secure-connected search short-circuits complete
    graphs, forces leaves and supports into every candidate (n >= 3), and
    starts at max(1 + domination number, forced-set size); the secure-total
    search starts at the total domination number.  Disabling pruning
    enumerates every subset from size 1, for soundness cross-checks.
    """
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}")
    if graph.n < 1:
        raise DomainError("graph must have at least one vertex")
    if max_n is not None and graph.n > max_n:
        raise DomainError(
            f"exact search refused for n={graph.n} > {max_n}; raise max_n to override"
        )
    if variant in ("cds", "scds", "stds") and not graph.is_connected():
        raise DomainError(f"variant {variant} requires a connected graph")
    if variant in ("tds", "stds") and any(len(a) == 0 for a in graph.adj):
        raise DomainError(f"variant {variant} requires a graph without isolated vertices")

    start = time.perf_counter()
    if use_pruning and variant == "scds" and graph.is_complete():
        return SolveReport(
            variant=variant,
            value=1,
            witness=frozenset({0}),
            method=METHOD_TRIVIAL,
            elapsed=time.perf_counter() - start,
            nodes_explored=0,
        )

    forced: frozenset[int] = frozenset()
    lower = 1
    if use_pruning:
        if variant == "scds":
            # Non-complete from here on: one below the optimum is still
            # dominating, and every leaf and support is mandatory.
            gamma = solve(graph, "ds", max_n=max_n).value
            if graph.n >= 3:
                forced = graph.leaves() | graph.supports()
            lower = max(1 + gamma, len(forced))
        elif variant == "stds":
            lower = solve(graph, "tds", max_n=max_n).value

    check = _checker(variant)
    free = [v for v in range(graph.n) if v not in forced]
    nodes = 0
    for size in range(max(lower, 1), graph.n + 1):
        need = size - len(forced)
        if need < 0:
            continue
        for combo in combinations(free, need):
            nodes += 1
            candidate = forced | frozenset(combo)
            if check(graph, candidate):
                return SolveReport(
                    variant=variant,
                    value=size,
                    witness=candidate,
                    method=METHOD_EXACT,
                    elapsed=time.perf_counter() - start,
                    nodes_explored=nodes,
                )
    raise RuntimeError(f"no {variant} certificate up to size n; preconditions violated?")


# -- small-graph enumeration up to isomorphism ----------------------------

ENUMERATION_LIMIT = 6
CANONICAL_LIMIT = 8


@lru_cache(maxsize=None)
def _edge_slots(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _permutation_powers(n: int) -> np.ndarray:
    """Row r maps edge slot i to 2**(slot of the edge under permutation r)."""
    slots = _edge_slots(n)
    index = {e: i for i, e in enumerate(slots)}
    perms = list(permutations(range(n)))
    table = np.empty((len(perms), len(slots)), dtype=np.int64)
    for r, perm in enumerate(perms):
        for i, (u, v) in enumerate(slots):
            a, b = perm[u], perm[v]
            table[r, i] = index[(a, b) if a < b else (b, a)]
    return np.left_shift(np.int64(1), table)


def _mask_of(graph: Graph) -> int:
    index = {e: i for i, e in enumerate(_edge_slots(graph.n))}
    mask = 0
    for e in graph.edges():
        mask |= 1 << index[e]
    return mask


def _graph_of_mask(n: int, mask: int) -> Graph:
    slots = _edge_slots(n)
    return Graph.from_edges(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])


def canonical_form(graph: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key (n, minimized edge bitmask over relabelings).

    Brute-forces all n! relabelings, so it is restricted to n <= 8.
    """
    if graph.n > CANONICAL_LIMIT:
        raise DomainError(f"canonical form is brute force; n={graph.n} > {CANONICAL_LIMIT}")
    if graph.m == 0:
        return graph.n, 0
    powers = _permutation_powers(graph.n)
    mask = _mask_of(graph)
    bits = [i for i in range(powers.shape[1]) if mask >> i & 1]
    return graph.n, int(powers[:, bits].sum(axis=1).min())


def _mask_connected(n: int, mask: int, slots: tuple[tuple[int, int], ...]) -> bool:
    if n == 1:
        return True
    nbr = [0] * n
    for i, (u, v) in enumerate(slots):
        if mask >> i & 1:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                nxt |= nbr[v]
            f >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


@lru_cache(maxsize=None)
def _connected_class_masks(n: int) -> tuple[int, ...]:
    slots = _edge_slots(n)
    canons: set[int] = set()
    powers = _permutation_powers(n)
    for mask in range(1 << len(slots)):
        if not _mask_connected(n, mask, slots):
            continue
        if mask == 0:
            canons.add(0)
            continue
        bits = [i for i in range(len(slots)) if mask >> i & 1]
        canons.add(int(powers[:, bits].sum(axis=1).min()))
    return tuple(sorted(canons))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on n vertices, one per isomorphism class, in a
    deterministic order.  Refused above n=6: the labeled universe doubles
    per edge slot and there are 2^15 masks already at n=6.
    """
    if not (1 <= n <= ENUMERATION_LIMIT):
        raise DomainError(f"enumeration supported for 1 <= n <= {ENUMERATION_LIMIT}")
    for mask in _connected_class_masks(n):
        yield _graph_of_mask(n, mask)


# -- seeded random generators ----------------------------------------------


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Connected G(n, p) sample; resamples until connected (bounded retries)."""
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = random.Random(seed)
    for _ in range(10_000):
        edges = [e for e in combinations(range(n), 2) if rng.random() < edge_probability]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g
    raise DomainError("failed to sample a connected graph; raise edge_probability")


def random_tree(n: int, seed: int) -> Graph:
    """Uniform-attachment random tree on n vertices."""
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = random.Random(seed)
    return Graph.from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_block_graph(n: int, seed: int) -> Graph:
    """Random block graph: cliques of size 2..4 glued tree-fashion at shared
    cut vertices until n vertices exist."""
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    built = 1
    while built < n:
        cut = rng.randrange(built)
        size = rng.randint(2, min(4, n - built + 1))
        block = [cut] + list(range(built, built + size - 1))
        built += size - 1
        edges.extend(combinations(block, 2))
    return Graph.from_edges(n, edges)


def random_threshold_graph(n: int, seed: int) -> Graph:
    """Random creation sequence (each new vertex isolated or universal); the
    final vertex is forced universal so the result is connected."""
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        universal = True if v == n - 1 else rng.random() < 0.5
        if universal:
            edges.extend((u, v) for u in range(v))
    return Graph.from_edges(n, edges)
