"""Bound quantities for the ancestral spectral radius and their verdicts.

Every bound quantity is kept as an exact integer or rational; only the final
comparison against the numeric spectral radius uses floats, so rounding can
never flip a verdict on its own.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .ancestral_matrices import ancestral_matrix
from .errors import NotALeaf, SingleVertexTree
from .spectral import DEFAULT_TOL, spectral_radius
from .tree_core import RootedTree, branch_children, structural_stats, subtree

BOUND_TOL = 1e-7
EQUALITY_WINDOW = 1e-6


def _distances_from(tree: RootedTree, source: int) -> list[int]:
    """Breadth-first distances in the underlying undirected tree."""
    dist = [-1] * tree.n_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        neighbours = list(tree.children[v])
        if tree.parent[v] is not None:
            neighbours.append(tree.parent[v])
        for w in neighbours:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def leaf_distance_sum(tree: RootedTree, v: int) -> int:
    """Sum of distances from v to every leaf."""
    dist = _distances_from(tree, v)
    return sum(dist[w] for w in tree.leaf_order)


def total_ancestral_depth(tree: RootedTree, v: int) -> int:
    """Row sum of v's row of the ancestral matrix: sum over leaves w of the
    ancestral level of v and w."""
    if v < 0 or v >= tree.n_vertices or tree.children[v]:
        raise NotALeaf(f"{v} is not a leaf")
    i = tree.leaf_order.index(v)
    return sum(ancestral_matrix(tree).rows[i])


def terminal_wiener(tree: RootedTree) -> int:
    """Sum of pairwise distances between leaves, by breadth-first search."""
    leaves = tree.leaf_order
    total = 0
    for idx, v in enumerate(leaves):
        dist = _distances_from(tree, v)
        for w in leaves[idx + 1:]:
            total += dist[w]
    return total


def q_value(tree: RootedTree) -> int:
    """Sum of all entries of the ancestral matrix."""
    return sum(sum(row) for row in ancestral_matrix(tree).rows)


def q_recursion_check(tree: RootedTree) -> bool:
    """Branch recursion for the matrix-entry sum: the value for the whole
    tree equals the sum over branches of (branch value + branch leaf count
    squared), recursively down to single vertices."""

    def recurse(t: RootedTree) -> int:
        if t.n_vertices == 1:
            return 0
        total = 0
        for c in branch_children(t):
            sub = subtree(t, c)
            total += recurse(sub) + sub.n_leaves ** 2
        return total

    return recurse(tree) == q_value(tree)


@dataclass(frozen=True)
class BoundReport:
    rho: float
    avg_ad: Fraction
    max_ad: int
    tw_bound: Fraction
    height_bound: int
    delta_bound: Fraction
    all_satisfied: bool
    margins: dict[str, float]


def bound_report(tree: RootedTree, tol: float = BOUND_TOL,
                 eig_tol: float = DEFAULT_TOL) -> BoundReport:
    """Evaluate every spectral-radius bound on one tree.

    Bounds: average row sum <= rho <= max row sum; rho >= (sum of leaf
    levels) - (terminal Wiener index)/(leaf count), which is the same
    rational as the average row sum; rho >= height; rho >= (L-1)/(Delta-1)
    for Delta >= 2.  Trees where the maximum outdegree is below 2 carry a
    vacuous degree bound, reported as 0.
    """
    if tree.n_vertices == 1:
        raise SingleVertexTree("bounds are vacuous on a single vertex")
    stats = structural_stats(tree)
    rows = ancestral_matrix(tree).rows
    row_sums = [sum(r) for r in rows]
    avg_ad = Fraction(sum(row_sums), stats.L)
    max_ad = max(row_sums)
    tw_bound = Fraction(stats.D_root) - Fraction(terminal_wiener(tree), stats.L)
    if tw_bound != avg_ad:
        raise AssertionError("the two lower-bound derivations disagree")
    height_bound = stats.h
    delta_bound = (Fraction(stats.L - 1, stats.delta - 1)
                   if stats.delta >= 2 else Fraction(0))
    rho = spectral_radius(tree, eig_tol).rho
    margins = {
        "avg_ad": rho - float(avg_ad),
        "max_ad": float(max_ad) - rho,
        "tw_bound": rho - float(tw_bound),
        "height": rho - float(height_bound),
        "delta": rho - float(delta_bound),
    }
    all_satisfied = all(m >= -tol for m in margins.values())
    return BoundReport(rho=rho, avg_ad=avg_ad, max_ad=max_ad,
                       tw_bound=tw_bound, height_bound=height_bound,
                       delta_bound=delta_bound, all_satisfied=all_satisfied,
                       margins=margins)


def is_complete_dary(tree: RootedTree) -> bool:
    """All internal vertices have the same outdegree >= 2 and all leaves
    share one level."""
    degs = {len(c) for c in tree.children if c}
    if len(degs) != 1 or min(degs) < 2:
        return False
    levels = {tree.level[v] for v in tree.leaf_order}
    return len(levels) == 1


def delta_equality_holds(tree: RootedTree, window: float = EQUALITY_WINDOW,
                         eig_tol: float = DEFAULT_TOL) -> bool:
    """Whether rho equals (L-1)/(Delta-1) within the clustering window.
    Only meaningful when the maximum outdegree is at least 2."""
    stats = structural_stats(tree)
    if stats.delta < 2:
        return False
    bound = Fraction(stats.L - 1, stats.delta - 1)
    return abs(spectral_radius(tree, eig_tol).rho - float(bound)) <= window
