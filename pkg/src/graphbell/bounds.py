"""Compositional upper bounds on D(G) for graphs beyond the exact-search cap.

The product rule is the workhorse: when a graph splits as two subgraphs
joined by exactly one bridge edge, D of the whole is at most the product of
the two sides' D values. The rule is only sound across bridges; multiplying
across multi-edge cuts is refused (the 6-clique already beats the product of
two triangles). Pieces that fit the exact-search cap get exact values; a
bridgeless piece that does not fit falls back to an induced-subgraph
relaxation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CapExceededError, InvalidGraphError
from .graph import (
    Graph,
    bridges,
    induced_subgraph,
    is_connected,
    is_tree,
    iter_bits,
)
from .lhv import EXACT_SEARCH_CAP, classical_bound
from .table import CHAIN_PIECE_D


@dataclass(frozen=True)
class ExactStep:
    """Leaf: a piece small enough for the exact search."""

    vertices: int
    d: Fraction

    @property
    def value(self) -> Fraction:
        return self.d

    def to_json_dict(self) -> dict:
        return {
            "kind": "exact",
            "vertices": sorted(iter_bits(self.vertices)),
            "d": [self.d.numerator, self.d.denominator],
        }


@dataclass(frozen=True)
class BridgeStep:
    """Product of the two sides of a single bridge."""

    bridge: tuple[int, int]
    left: "DerivationStep"
    right: "DerivationStep"

    @property
    def value(self) -> Fraction:
        return self.left.value * self.right.value

    def to_json_dict(self) -> dict:
        return {
            "kind": "bridge_product",
            "bridge": list(self.bridge),
            "left": self.left.to_json_dict(),
            "right": self.right.to_json_dict(),
            "value": [self.value.numerator, self.value.denominator],
        }


@dataclass(frozen=True)
class SubgraphStep:
    """Bridgeless oversized piece, bounded through an induced subgraph."""

    piece_vertices: int
    subgraph_vertices: int
    d_sub: Fraction
    note: str = "no usable bridge; induced-subgraph relaxation"

    @property
    def value(self) -> Fraction:
        m = self.subgraph_vertices.bit_count()
        n = self.piece_vertices.bit_count()
        return 1 - (1 - self.d_sub) / (1 << (n - m))

    def to_json_dict(self) -> dict:
        return {
            "kind": "subgraph_relaxation",
            "piece_vertices": sorted(iter_bits(self.piece_vertices)),
            "subgraph_vertices": sorted(iter_bits(self.subgraph_vertices)),
            "d_sub": [self.d_sub.numerator, self.d_sub.denominator],
            "value": [self.value.numerator, self.value.denominator],
            "note": self.note,
        }


DerivationStep = ExactStep | BridgeStep | SubgraphStep


@dataclass(frozen=True)
class CompositeBound:
    """Upper bound on D(G) with a replayable derivation tree."""

    value: Fraction
    derivation: DerivationStep
    is_exact: bool

    def to_json_dict(self) -> dict:
        return {
            "value": [self.value.numerator, self.value.denominator],
            "is_exact": self.is_exact,
            "derivation": self.derivation.to_json_dict(),
        }


def replay(step: DerivationStep) -> Fraction:
    """Recompute a derivation tree's value from its leaves."""
    if isinstance(step, BridgeStep):
        return replay(step.left) * replay(step.right)
    return step.value


def subgraph_bound(g: Graph, subset: int, d_sub: Fraction) -> Fraction:
    """Bound D(G) from the exact D of an induced subgraph on ``subset``.

    Restricting the stabilizer to the 2^m elements generated inside the
    subset reproduces the subgraph's operator up to extra Z letters that a
    +1-on-Z assignment ignores; bounding the other 2^n - 2^m terms by 1 each
    gives D(G) <= 1 - (1 - d_sub) / 2^(n-m).
    """
    m = subset.bit_count()
    if m == 0 or subset & ~g.vertex_mask:
        raise InvalidGraphError("subset must be a nonempty vertex set of the graph")
    if d_sub > 1:
        raise ValueError(f"d_sub must be at most 1, got {d_sub}")
    return 1 - (1 - Fraction(d_sub)) / (1 << (g.n - m))


def _largest_tractable_subgraph(g: Graph, piece: int, cap: int) -> int:
    """Connected induced subgraph of at most ``cap`` vertices, grown by BFS.

    Starts from the highest-degree vertex (ties to the smallest label) and
    absorbs neighbors in label order, which keeps the choice deterministic.
    """
    degrees = {v: (g.adj[v] & piece).bit_count() for v in iter_bits(piece)}
    start = max(degrees, key=lambda v: (degrees[v], -v))
    chosen = 1 << start
    frontier = [start]
    while frontier and chosen.bit_count() < cap:
        v = frontier.pop(0)
        for w in iter_bits(g.adj[v] & piece & ~chosen):
            chosen |= 1 << w
            frontier.append(w)
            if chosen.bit_count() == cap:
                break
    return chosen


@lru_cache(maxsize=4096)
def _exact_d_of(sub: Graph) -> Fraction:
    # pieces repeat under composition (all k-paths relabel identically),
    # so cache by the relabeled shape; caller guarantees the size fits
    return classical_bound(sub, exact_cap=sub.n).d


def _exact_d(g: Graph, piece: int) -> Fraction:
    sub, _ = induced_subgraph(g, piece)
    return _exact_d_of(sub)


_EXHAUSTIVE_PIECE_LIMIT = 50_000


def _path_order(g: Graph, piece: int) -> list[int] | None:
    """Vertices of a path-shaped piece in path order, or None if not a path."""
    verts = list(iter_bits(piece))
    if len(verts) < 2:
        return None
    degrees = {v: (g.adj[v] & piece).bit_count() for v in verts}
    ends = sorted(v for v in verts if degrees[v] == 1)
    if len(ends) != 2 or any(d > 2 for d in degrees.values()):
        return None
    order = [ends[0]]
    seen = 1 << ends[0]
    while len(order) < len(verts):
        step = g.adj[order[-1]] & piece & ~seen
        if step == 0 or step.bit_count() != 1:
            return None  # disconnected or branching
        nxt = step.bit_length() - 1
        order.append(nxt)
        seen |= step
    return order


def _best_path_partition(length: int, max_piece: int) -> tuple[list[Fraction], list[int]]:
    """DP over contiguous partitions of a chain into pieces of 1..max_piece.

    Returns (best value per length, first-piece size realizing it). Pieces
    carry their exact chain values; one- and two-vertex pieces count 1.
    """
    max_piece = min(max_piece, 10)
    best: list[Fraction] = [Fraction(1)] * (length + 1)
    first: list[int] = [0] * (length + 1)
    for m in range(1, length + 1):
        if m <= max_piece:
            best[m] = CHAIN_PIECE_D.get(m, Fraction(1))
            first[m] = m
        else:
            best[m] = Fraction(2)  # above any valid bound
        for k in range(1, min(max_piece, m - 1) + 1):
            candidate = CHAIN_PIECE_D.get(k, Fraction(1)) * best[m - k]
            if candidate < best[m]:
                best[m] = candidate
                first[m] = k
    return best, first


class _Composer:
    def __init__(self, g: Graph, cap: int, exhaustive: bool):
        self.g = g
        self.cap = cap
        self.exhaustive = exhaustive
        self.memo: dict[int, DerivationStep] = {}

    def run(self, piece: int) -> DerivationStep:
        if piece in self.memo:
            return self.memo[piece]
        if self.exhaustive and len(self.memo) > _EXHAUSTIVE_PIECE_LIMIT:
            raise CapExceededError(
                "exhaustive bridge search explored too many pieces; use the greedy mode"
            )
        step = self._compose(piece)
        self.memo[piece] = step
        return step

    def _compose(self, piece: int) -> DerivationStep:
        g, cap = self.g, self.cap
        size = piece.bit_count()
        if size <= cap:
            return ExactStep(piece, _exact_d(g, piece))
        sub, labels = induced_subgraph(g, piece)
        piece_bridges = [(labels[u], labels[v]) for u, v in bridges(sub)]
        if not piece_bridges:
            subset = _largest_tractable_subgraph(g, piece, cap)
            return SubgraphStep(piece, subset, _exact_d(g, subset))
        if self.exhaustive:
            return min((self._split(piece, e) for e in piece_bridges),
                       key=lambda s: (s.value, s.bridge))
        path = _path_order(g, piece) if cap >= 3 else None
        if path is not None:
            # chain DP knows the optimal contiguous partition of a path
            _, first = _best_path_partition(size, cap)
            k = first[size]
            return self._split(piece, (path[k - 1], path[k]))

        def balance(edge: tuple[int, int]) -> int:
            return abs(2 * _side_of_bridge(g, piece, *edge).bit_count() - size)

        best_edge = min(piece_bridges, key=lambda e: (balance(e), e))
        return self._split(piece, best_edge)

    def _split(self, piece: int, edge: tuple[int, int]) -> BridgeStep:
        u, v = min(edge), max(edge)
        side_u = _side_of_bridge(self.g, piece, u, v)
        return BridgeStep((u, v), self.run(side_u), self.run(piece & ~side_u))


def _side_of_bridge(g: Graph, piece: int, u: int, v: int) -> int:
    """Vertices of ``piece`` reachable from u once the bridge {u, v} is cut."""
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    comp = 1 << u
    frontier = 1 << u
    while frontier:
        reach = 0
        for i in iter_bits(frontier):
            reach |= adj[i]
        frontier = reach & piece & ~comp
        comp |= frontier
    return comp


def bridge_compose_bound(
    g: Graph, exact_cap: int = EXACT_SEARCH_CAP, exhaustive: bool = False
) -> CompositeBound:
    """Upper-bound D(G) by splitting at bridges until every piece is tractable.

    Bridge selection is greedy: path-shaped pieces split where the chain
    dynamic program says the optimal contiguous partition starts, everything
    else splits at the most balanced bridge (deterministic tie break).
    ``exhaustive`` instead minimizes over every bridge choice with piece
    memoization, which is only sensible up to around 20 vertices. Pieces
    within the cap get exact values; bridgeless oversized pieces fall back to
    the induced-subgraph relaxation. Splits never cross multi-edge cuts: the
    product rule is unsound there.
    """
    if not is_connected(g):
        raise InvalidGraphError("compositional bound expects a connected graph")
    step = _Composer(g, exact_cap, exhaustive).run(g.vertex_mask)
    is_exact = isinstance(step, ExactStep) and step.vertices == g.vertex_mask
    return CompositeBound(step.value, step, is_exact)


def chain_bound(length: int) -> Fraction:
    """Best product bound for a linear chain, minimized over bridge partitions.

    Contiguous pieces carry their exact chain values (known up to 10
    vertices); a chain of at most 10 vertices returns its exact value
    directly.
    """
    if length < 2:
        raise ValueError(f"chain bound needs length >= 2, got {length}")
    best, _ = _best_path_partition(length, 10)
    return best[length]


@dataclass(frozen=True)
class TreeCertificate:
    """Violation certificate for a tree: its longest chain's product bound."""

    longest_path_length: int
    bound: Fraction


def _farthest(g: Graph, start: int) -> tuple[int, int]:
    dist = {start: 0}
    frontier = [start]
    last = start
    while frontier:
        nxt = []
        for v in frontier:
            for w in iter_bits(g.adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        if nxt:
            last = max(nxt, key=lambda v: (dist[v], -v))
        frontier = nxt
    return last, dist[last]


def tree_certificate(g: Graph) -> TreeCertificate:
    """Bound a tree through its longest path.

    Peeling the off-path branches at their attachment bridges contributes
    factors of at most 1, so the chain bound of the longest path alone is a
    valid (possibly loose) bound on the whole tree.
    """
    if not is_tree(g):
        raise InvalidGraphError("tree certificate requires a tree")
    if g.n == 1:
        return TreeCertificate(1, Fraction(1))
    u, _ = _farthest(g, 0)
    _, dist = _farthest(g, u)
    path_len = dist + 1
    return TreeCertificate(path_len, chain_bound(path_len))


def geometric_measure_lower_bound(d: Fraction) -> Fraction:
    """Lower bound on the geometric measure of entanglement from a classical bound."""
    if not 0 < d <= 1:
        raise ValueError(f"d must be in (0, 1], got {d}")
    return 1 - Fraction(d)


def ppt_scope_flag(d: Fraction) -> bool:
    """True iff the inequality can only detect states that are NPT for every bipartition."""
    if not 0 < d <= 1:
        raise ValueError(f"d must be in (0, 1], got {d}")
    return d >= Fraction(1, 2)
