"""Bijection between deep, high-outdegree marked vertices and lattice paths.

For ``k, l >= 0`` let ``V(n, k, l)`` be the marked trees with ``n`` edges whose
marked vertex has outdegree at least ``k`` and level at least ``l``, and let
``L(n, k, l)`` be the lattice paths from ``(k, k)`` to ``(2n, -2l)`` made of
``n - k - l`` Ups and ``n + l`` Downs.  ``phi_map`` sends ``V`` onto ``L``:

1. cut the tree into the subtree below the mark, the forests hanging to the
   right of the root-to-mark spine (nearest the mark first) and the rest;
2. concatenate ``psi`` of the subtree and ``phi`` of each remaining piece,
   separated by single Down steps;
3. reflect everything after the first visit to height ``-l-1``;
4. drop the first ``k`` steps and the last ``level + 1`` steps.

Each step is undone in ``phi_map_inv``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .marked import NotInClassError
from .path_codec import (
    DOWN,
    UP,
    LatticePath,
    PathError,
    phi,
    phi_inv,
    psi,
    psi_inv,
    reflect_suffix,
)
from .tree_core import MarkedTree, Tree


@dataclass(frozen=True)
class Decomposition:
    below: Tree
    """Subtree of the marked vertex and its descendants."""
    right: tuple[Tree, ...]
    """Forests right of the spine, each hung from a bare root; entry 0 holds
    the marked vertex's right siblings, the last entry those of the level-1
    spine vertex."""
    rest: Tree
    """Everything else; the marked vertex is its last preorder vertex."""

    @property
    def outdegree(self) -> int:
        return len(self.below.children)

    @property
    def level(self) -> int:
        return len(self.right)

    @property
    def edges(self) -> int:
        return self.below.edges + sum(r.edges for r in self.right) + self.rest.edges


def _spine(m: MarkedTree) -> list[int]:
    """Child positions along the path from the root to the marked vertex."""
    path: list[int] = []
    node, target, index = m.tree, m.mark, 0
    while index != target:
        index += 1  # step into the first child
        for i, child in enumerate(node.children):
            size = child.edges + 1
            if target < index + size:
                path.append(i)
                node = child
                break
            index += size
        else:
            raise AssertionError("mark outside the tree")
    return path


def decompose(m: MarkedTree) -> Decomposition:
    path = _spine(m)
    spine = [m.tree]
    for i in path:
        spine.append(spine[-1].children[i])
    depth = len(path)
    right = tuple(
        Tree(spine[depth - j].children[path[depth - j] + 1:])
        for j in range(1, depth + 1)
    )
    rest = Tree()
    for j in range(depth - 1, -1, -1):
        rest = Tree(spine[j].children[:path[j]] + (rest,))
    return Decomposition(spine[-1], right, rest)


def last_leaf_depth(tree: Tree) -> int:
    depth = 0
    while tree.children:
        tree = tree.children[-1]
        depth += 1
    return depth


def recompose(d: Decomposition) -> MarkedTree:
    if last_leaf_depth(d.rest) != d.level:
        raise ValueError(
            f"remainder's last leaf is at level {last_leaf_depth(d.rest)}, "
            f"expected {d.level}")
    lefts = []
    node = d.rest
    while node.children:
        lefts.append(node.children[:-1])
        node = node.children[-1]
    tree = d.below
    for depth in range(d.level - 1, -1, -1):
        tree = Tree(lefts[depth] + (tree,) + d.right[d.level - 1 - depth].children)
    return MarkedTree(tree, d.rest.edges)


def assemble_P(d: Decomposition) -> LatticePath:
    """psi(below), then phi of each right forest and of the rest, Down-separated."""
    pieces = [psi(d.below).steps]
    pieces += [phi(r).steps for r in d.right]
    pieces.append(phi(d.rest).steps)
    return LatticePath(DOWN.join(pieces))


def _require_deep(m: MarkedTree, k: int, l: int) -> None:
    if k < 0 or l < 0:
        raise NotInClassError(f"parameters must be non-negative, got k={k}, l={l}")
    st = m.stats
    if st.outdegree < k:
        raise NotInClassError(f"{m}: outdegree {st.outdegree} is less than k={k}")
    if st.level < l:
        raise NotInClassError(f"{m}: level {st.level} is less than l={l}")


def phi_map(m: MarkedTree, k: int, l: int) -> LatticePath:
    _require_deep(m, k, l)
    n = m.tree.edges
    d = decompose(m)
    depth = d.level
    p = assemble_P(d)
    assert len(p) == 2 * n + depth + 1 and p.end[1] == -depth - 1
    reflected = reflect_suffix(p, -l - 1).steps
    tail = DOWN + UP * depth
    assert reflected.startswith(UP * d.outdegree) and reflected.endswith(tail)
    return LatticePath(reflected[k:len(reflected) - len(tail)], (k, k))


def in_ell_set(q: LatticePath, n: int, k: int, l: int) -> bool:
    return (
        q.start == (k, k)
        and len(q) == 2 * n - k
        and q.ups == n - k - l
        and q.downs == n + l
    )


def phi_map_inv(q: LatticePath | str, n: int, k: int, l: int) -> MarkedTree:
    if isinstance(q, str):
        q = LatticePath.parse(q)
    if not in_ell_set(q, n, k, l):
        raise PathError(
            f"{q} is not a path from ({k},{k}) to ({2 * n},{-2 * l}) "
            f"with {n - k - l} Ups and {n + l} Downs")
    e = reflect_suffix(LatticePath(UP * k + q.steps + DOWN), -l - 1)
    depth = -min(e.heights()) - 1
    assert depth >= l
    p = e.steps + DOWN * depth

    # cut at the first passages to -1, -2, ..., -depth-1
    cuts = []
    h, target = 0, -1
    for i, s in enumerate(p):
        h += 1 if s == UP else -1
        if h == target:
            cuts.append(i)
            target -= 1
            if len(cuts) == depth + 1:
                break
    assert len(cuts) == depth + 1
    below = psi_inv(p[:cuts[0]])
    right = tuple(phi_inv(p[a + 1:b]) for a, b in zip(cuts, cuts[1:]))
    rest = phi_inv(p[cuts[-1] + 1:])
    if last_leaf_depth(rest) != depth or len(below.children) < k:
        raise PathError(f"{q} does not decode to a marked tree")
    return recompose(Decomposition(below, right, rest))


def ell_set_size(n: int, k: int, l: int) -> int:
    if n - k - l < 0:
        return 0
    return comb(2 * n - k, n + l)


def ell_set(n: int, k: int, l: int) -> Iterator[LatticePath]:
    """Every member of L(n, k, l), in a fixed deterministic order."""
    ups = n - k - l
    if ups < 0:
        return
    length = 2 * n - k
    for pos in combinations(range(length), ups):
        word = [DOWN] * length
        for i in pos:
            word[i] = UP
        yield LatticePath("".join(word), (k, k))
