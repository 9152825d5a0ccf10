r"""Bipartite localization trees and their closed-sector contributions.

A tree has black and white vertices (the two torus-fixed orbifold points of
the exceptional curve class), and edges labeled with positive winding
degrees.  Edges are distinguishable during contribution assembly; trees are
deduplicated up to color- and label-preserving isomorphism with a canonical
rooted code.

The orbifold-side contribution of a tree is an exact series in ``Z`` (the
interior insertion variable), ``P`` (the exceptional curve class), and ``W``
(the fiber class): each vertex carries the disk or multi-boundary series of
its winding profile, each edge a factor ``(-1)^d * 2d * (P e^W)^d``, and each
white vertex end a sign ``(-1)^d``.  The single-edge trees also receive a
separate bookkeeping term ``(P e^W)^d/(2 d^3)``.

The resolution-side contribution keeps the one-boundary antiderivative
blocks ``A_d`` symbolic: the value is a polynomial in the ``A_d`` with
:class:`~crepant.qfunc.QRational` coefficients, summed over the subsets S of
edges that choose which endpoint of the compact curve each cover approaches.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .potentials import aut_count, profile_series_orbifold, twisted_disk_series
from .qfunc import QRational
from .series import Caps, Monomial, TruncSeries, VarId
from .vertexedge import central_binomial_half

__all__ = [
    "LocalizationTree",
    "enumerate_trees",
    "p_exp_w",
    "orbifold_tree_series",
    "single_edge_extra_series",
    "orbifold_tree_sum",
    "ResolutionTreeValue",
    "resolution_tree_value",
]

Z_VAR = VarId.analytic("z")
P_VAR = VarId.degree("P")
W_VAR = VarId.degree("W")


@dataclass(frozen=True)
class LocalizationTree:
    """Bipartite tree with degree-labeled edges.

    ``colors[v]`` is 'b' or 'w'; every edge ``(u, v, d)`` joins opposite
    colors with winding ``d >= 1``.
    """

    colors: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        n = len(self.colors)
        if any(c not in ("b", "w") for c in self.colors):
            raise ValueError("vertex colors must be 'b' or 'w'")
        if len(self.edges) != n - 1 or n < 2:
            raise ValueError("edge count must be vertex count minus one")
        seen = set()
        for u, v, d in self.edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError("edge endpoints out of range")
            if d < 1:
                raise ValueError("edge degrees must be >= 1")
            if self.colors[u] == self.colors[v]:
                raise ValueError("edges must join a black and a white vertex")
            seen.add(frozenset((u, v)))
        if len(seen) != len(self.edges):
            raise ValueError("duplicate edge")

    @property
    def total_degree(self) -> int:
        return sum(d for _, _, d in self.edges)

    def adjacency(self) -> list[list[tuple[int, int, int]]]:
        """Per vertex: list of (edge index, winding, other endpoint)."""
        adj: list[list[tuple[int, int, int]]] = [[] for _ in self.colors]
        for idx, (u, v, d) in enumerate(self.edges):
            adj[u].append((idx, d, v))
            adj[v].append((idx, d, u))
        return adj

    def profile(self, vertex: int) -> tuple[int, ...]:
        return tuple(sorted((d for _, d, _ in self.adjacency()[vertex]), reverse=True))

    def canonical_key(self) -> tuple:
        adj = self.adjacency()

        def code(v: int, parent: int) -> tuple:
            children = sorted(
                (d, code(u, v)) for _, d, u in adj[v] if u != parent
            )
            return (self.colors[v], tuple(children))

        return min(code(v, -1) for v in range(len(self.colors)))


def enumerate_trees(max_total: int, max_label: int, max_edges: int) -> list[LocalizationTree]:
    """All isomorphism classes with total winding <= max_total, labels <=
    max_label, and at most max_edges edges, by leaf growth with canonical
    deduplication."""
    if max_total < 1 or max_label < 1 or max_edges < 1:
        return []
    found: dict[tuple, LocalizationTree] = {}
    frontier: list[LocalizationTree] = []
    for d in range(1, min(max_total, max_label) + 1):
        tree = LocalizationTree(("b", "w"), ((0, 1, d),))
        found[tree.canonical_key()] = tree
        frontier.append(tree)
    while frontier:
        nxt: list[LocalizationTree] = []
        for tree in frontier:
            if len(tree.edges) >= max_edges:
                continue
            budget = max_total - tree.total_degree
            if budget < 1:
                continue
            n = len(tree.colors)
            for v in range(n):
                new_color = "w" if tree.colors[v] == "b" else "b"
                for d in range(1, min(budget, max_label) + 1):
                    grown = LocalizationTree(
                        tree.colors + (new_color,), tree.edges + ((v, n, d),)
                    )
                    key = grown.canonical_key()
                    if key not in found:
                        found[key] = grown
                        nxt.append(grown)
        frontier = nxt
    return sorted(
        found.values(), key=lambda t: (len(t.edges), t.total_degree, t.canonical_key())
    )


def p_exp_w(caps: Caps, degree: int, var: VarId = Z_VAR) -> TruncSeries:
    """(P e^W)^degree as a series in the degree variables P and W."""
    coeffs = {}
    for j in range(caps.max_degree + 1):
        coeffs[Monomial.build({P_VAR: degree, W_VAR: j})] = Fraction(degree ** j, factorial(j))
    return TruncSeries(caps, coeffs, var)


def orbifold_tree_series(tree: LocalizationTree, caps: Caps) -> TruncSeries:
    """Orbifold-side contribution of one tree (without the single-edge extra)."""
    total = TruncSeries.one(caps, Z_VAR)
    for v, color in enumerate(tree.colors):
        profile = tree.profile(v)
        if len(profile) == 1:
            vertex = twisted_disk_series(profile[0], caps, Z_VAR)
        else:
            vertex = profile_series_orbifold(profile, caps, Z_VAR)
        if color == "w":
            sign = (-1) ** sum(profile)
            vertex = vertex.scale(sign)
        total = total * vertex
    for _, _, d in tree.edges:
        total = total * p_exp_w(caps, d).scale((-1) ** d * 2 * d)
    return total


def single_edge_extra_series(d: int, caps: Caps) -> TruncSeries:
    """Bookkeeping term (P e^W)^d / (2 d^3) paired with the degree-d edge."""
    return p_exp_w(caps, d).scale(Fraction(1, 2 * d ** 3))


def orbifold_tree_sum(trees: Iterable[LocalizationTree], caps: Caps) -> TruncSeries:
    """Sum of tree contributions, with the extras on single-edge trees."""
    total = TruncSeries.zero(caps, Z_VAR)
    for tree in trees:
        total = total + orbifold_tree_series(tree, caps)
        if len(tree.edges) == 1:
            total = total + single_edge_extra_series(tree.edges[0][2], caps)
    return total


@dataclass
class ResolutionTreeValue:
    """Resolution-side tree value, symbolic in the antiderivative blocks.

    ``terms`` maps a multiset of block degrees (d_1 >= d_2 >= ...) to the
    rational-in-Q coefficient multiplying ``prod A_(d_i)``; ``u_degree`` is
    the exceptional-class degree carried by ``(U e^Y)^u_degree``.
    """

    u_degree: int
    terms: dict[tuple[int, ...], QRational]

    def add_term(self, blocks: tuple[int, ...], qr: QRational) -> None:
        key = tuple(sorted(blocks, reverse=True))
        current = self.terms.get(key)
        self.terms[key] = qr if current is None else current + qr
        if self.terms[key].is_zero:
            del self.terms[key]


def _disk_coeff(d: int) -> Fraction:
    return Fraction((-1) ** (d + 1) * central_binomial_half(d), d)


def _vertex_y_terms(
    color: str, incident: Sequence[tuple[int, bool]]
) -> list[tuple[QRational, tuple[int, ...]]]:
    """Terms of one vertex for a fixed subset choice.

    ``incident`` lists (winding, chosen) for each incident edge, where chosen
    means the edge lies in the subset S of covers approaching the top fixed
    point of the compact curve.
    """
    n = len(incident)
    if n == 1:
        d, chosen = incident[0]
        towards_top = chosen if color == "b" else not chosen
        if towards_top:
            return [(QRational.monomial(-d, _disk_coeff(d)), (d,))]
        return [
            (QRational.monomial(0, _disk_coeff(d)), (d,)),
            (QRational.monomial(0, Fraction(1, d * d)), ()),
        ]
    profile = tuple(sorted((d for d, _ in incident), reverse=True))
    d_total = sum(profile)
    coeff = Fraction(-(2 ** (n - 1)), d_total * aut_count(profile))
    for d in profile:
        coeff *= (-1) ** d * central_binomial_half(d)
    if color == "b":
        shift = sum(d for d, chosen in incident if not chosen)
    else:
        shift = sum(d for d, chosen in incident if chosen)
    qr = coeff * QRational.geometric_core(d_total).x_derivative_iter(n - 2).shifted(
        shift - d_total
    )
    return [(qr, ())]


def resolution_tree_value(tree: LocalizationTree) -> ResolutionTreeValue:
    """Sum over edge subsets of the product of vertex terms and edge factors."""
    adj = tree.adjacency()
    n_edges = len(tree.edges)
    edge_scalar = Fraction(1)
    for _, _, d in tree.edges:
        edge_scalar *= -d
    value = ResolutionTreeValue(u_degree=tree.total_degree, terms={})
    for mask in range(1 << n_edges):
        partial: list[tuple[QRational, tuple[int, ...]]] = [
            (QRational.monomial(0, edge_scalar), ())
        ]
        for v, color in enumerate(tree.colors):
            incident = [(d, bool(mask >> idx & 1)) for idx, d, _ in adj[v]]
            vertex_terms = _vertex_y_terms(color, incident)
            partial = [
                (qr1 * qr2, blocks1 + blocks2)
                for qr1, blocks1 in partial
                for qr2, blocks2 in vertex_terms
            ]
        for qr, blocks in partial:
            value.add_term(blocks, qr)
    return value
