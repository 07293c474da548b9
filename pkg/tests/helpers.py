"""Shared test machinery: dense oracles, graph enumeration, random graphs.

The dense Pauli matrices here are built independently of the package's
oracle module so that algebra tests have a second route to the same answer.
"""

from __future__ import annotations

import itertools
import random
from functools import reduce

import hypothesis.strategies as st
import numpy as np

from graphbell import Graph, from_edges, is_connected

I2 = np.eye(2, dtype=complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)
LETTER = {"1": I2, "X": X2, "Y": Y2, "Z": Z2}


def dense_pauli(letters: str, sign: int = 1) -> np.ndarray:
    """Dense matrix of a Pauli word, qubit 0 = leftmost letter = low index bit."""
    mats = [LETTER[ch] for ch in letters]
    return sign * reduce(np.kron, reversed(mats))


def dense_of(p) -> np.ndarray:
    """Dense matrix of a package PauliString via its letter rendering."""
    return dense_pauli(p.to_text()[1:], p.sign)


def edge_index_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    pairs = edge_index_pairs(n)
    return from_edges(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def all_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices."""
    m = n * (n - 1) // 2
    return (graph_from_edge_mask(n, mask) for mask in range(1 << m))


def connected_labeled_graphs(n: int) -> list[Graph]:
    return [g for g in all_labeled_graphs(n) if is_connected(g)]


_CLASS_CACHE: dict[int, list[Graph]] = {}


def connected_graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs (n <= 6)."""
    if n in _CLASS_CACHE:
        return _CLASS_CACHE[n]
    if n > 6:
        raise ValueError("exhaustive class enumeration is only tractable up to n = 6")
    pairs = edge_index_pairs(n)
    m = len(pairs)
    index = {e: k for k, e in enumerate(pairs)}
    connected_masks = np.array(
        [mask for mask in range(1 << m) if is_connected(graph_from_edge_mask(n, mask))],
        dtype=np.int64,
    )
    bits = (connected_masks[:, None] >> np.arange(m)) & 1
    weights = (np.int64(1) << np.arange(m)).astype(np.int64)
    canonical = None
    for perm in itertools.permutations(range(n)):
        cols = [index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs]
        packed = bits[:, cols] @ weights
        canonical = packed if canonical is None else np.minimum(canonical, packed)
    reps = np.unique(canonical)
    graphs = [graph_from_edge_mask(n, int(mask)) for mask in reps]
    _CLASS_CACHE[n] = graphs
    return graphs


def random_connected_graph(rng: random.Random, n: int, extra_edge_prob: float = 0.3) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    for i, j in edge_index_pairs(n):
        if (i, j) not in edges and rng.random() < extra_edge_prob:
            edges.append((i, j))
    return from_edges(n, edges)


def compose_bridge(g1: Graph, g2: Graph, u: int, v: int) -> Graph:
    """Disjoint union of g1 and g2 joined by the single edge {u, g1.n + v}."""
    shift = g1.n
    edges = g1.edges() + [(i + shift, j + shift) for i, j in g2.edges()] + [(u, shift + v)]
    return from_edges(g1.n + g2.n, edges)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    """Strategy: arbitrary simple graphs via a random edge mask."""
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    return graph_from_edge_mask(n, draw(st.integers(0, (1 << m) - 1)))


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7):
    """Strategy: connected graphs, a random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    m = n * (n - 1) // 2
    extra = graph_from_edge_mask(n, draw(st.integers(0, (1 << m) - 1)))
    return from_edges(n, tree + extra.edges())


@st.composite
def pauli_strings(draw, min_n: int = 1, max_n: int = 5):
    """Strategy: arbitrary signed Pauli strings."""
    from graphbell import PauliString

    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    return PauliString(
        n,
        draw(st.integers(0, full)),
        draw(st.integers(0, full)),
        draw(st.sampled_from((1, -1))),
    )
