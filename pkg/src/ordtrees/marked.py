"""Marked-vertex classes A, B, C, D and the tree surgeries between them.

For parameters ``k, l >= 1`` and a tree with ``n`` edges:

* ``A``: first-children of degree ``k`` at level ``l``;
* ``B``: non-first-children of degree ``k`` at level ``l - 1``;
* ``C``: leaves with exactly ``k - 1`` elder siblings at level ``l``;
* ``D``: non-leaves of outdegree ``k`` at level ``l - 1``.

The root counts as a non-first-child, so for ``l = 1`` class ``B`` is the
set of roots of degree ``k``.  Each of ``A``, ``B`` and ``C`` is put in
bijection with ``D``; every other pair is routed through ``D``.
"""

from __future__ import annotations

from typing import Callable

from .tree_core import MarkedTree, VertexStats, parse

CLASSES = ("A", "B", "C", "D")


class NotInClassError(ValueError):
    """The marked vertex does not satisfy the class predicate a map requires."""


def membership_failure(st: VertexStats, cls: str, k: int, l: int) -> str | None:
    """Name the first condition of ``cls`` that ``st`` violates, or None."""
    if cls == "A":
        if not st.is_first_child:
            return "not a first-child"
        if st.degree != k:
            return f"degree is {st.degree}, not {k}"
        if st.level != l:
            return f"level is {st.level}, not {l}"
    elif cls == "B":
        if st.is_first_child:
            return "is a first-child"
        if st.degree != k:
            return f"degree is {st.degree}, not {k}"
        if st.level != l - 1:
            return f"level is {st.level}, not {l - 1}"
    elif cls == "C":
        if not st.is_leaf:
            return "not a leaf"
        if st.elder_siblings != k - 1:
            return f"has {st.elder_siblings} elder siblings, not {k - 1}"
        if st.level != l:
            return f"level is {st.level}, not {l}"
    elif cls == "D":
        if st.is_leaf:
            return "is a leaf"
        if st.outdegree != k:
            return f"outdegree is {st.outdegree}, not {k}"
        if st.level != l - 1:
            return f"level is {st.level}, not {l - 1}"
    else:
        raise ValueError(f"unknown class {cls!r}")
    return None


def in_class(st: VertexStats, cls: str, k: int, l: int) -> bool:
    return membership_failure(st, cls, k, l) is None


def classify(m: MarkedTree, k: int, l: int) -> set[str]:
    st = m.stats
    return {c for c in CLASSES if in_class(st, c, k, l)}


def class_parameters(st: VertexStats) -> dict[str, tuple[int, int]]:
    """The unique ``(k, l)`` for each class the vertex belongs to (k, l >= 1)."""
    out = {}
    if st.is_first_child:
        out["A"] = (st.degree, st.level)
    elif st.degree >= 1:
        out["B"] = (st.degree, st.level + 1)
    if st.is_leaf:
        if st.level >= 1:
            out["C"] = (st.elder_siblings + 1, st.level)
    else:
        out["D"] = (st.outdegree, st.level + 1)
    return out


def _require(m: MarkedTree, cls: str, k: int, l: int) -> None:
    if k < 1 or l < 1:
        raise NotInClassError(f"class parameters must be positive, got k={k}, l={l}")
    why = membership_failure(m.stats, cls, k, l)
    if why is not None:
        raise NotInClassError(f"{m} is not in class {cls} for k={k}, l={l}: {why}")


def _layout(word: str) -> tuple[list[int], list[int], list[int]]:
    """Opening position, closing position and parent of every vertex.

    The root's span is the whole word, written as (-1, len(word)).
    """
    size = len(word) // 2 + 1
    opens = [-1] * size
    closes = [len(word)] * size
    parent = [-1] * size
    stack = [0]
    nxt = 1
    for i, ch in enumerate(word):
        if ch == "(":
            opens[nxt] = i
            parent[nxt] = stack[-1]
            stack.append(nxt)
            nxt += 1
        else:
            closes[stack.pop()] = i
    return opens, closes, parent


def _marked(word: str, mark: int) -> MarkedTree:
    return MarkedTree(parse(word), mark)


def map_A_to_D(m: MarkedTree, k: int, l: int) -> MarkedTree:
    """Exchange the children of the marked first-child with its right siblings.

    The parent of the marked vertex carries the mark afterwards.
    """
    _require(m, "A", k, l)
    w = m.tree.word
    opens, closes, parent = _layout(w)
    v = m.mark
    u = parent[v]
    a, b, c = opens[v], closes[v], closes[u]
    return _marked(w[:a] + "(" + w[b + 1:c] + ")" + w[a + 1:b] + w[c:], u)


def map_D_to_A(m: MarkedTree, k: int, l: int) -> MarkedTree:
    _require(m, "D", k, l)
    w = m.tree.word
    opens, closes, _ = _layout(w)
    u = m.mark
    v = u + 1  # first child
    a, b, c = opens[v], closes[v], closes[u]
    return _marked(w[:a] + "(" + w[b + 1:c] + ")" + w[a + 1:b] + w[c:], v)


def map_B_to_D(m: MarkedTree, k: int, l: int) -> MarkedTree:
    """Move the first sibling of the marked vertex (with its subtree) under it.

    A marked root is already in ``D`` and is returned unchanged.
    """
    _require(m, "B", k, l)
    v = m.mark
    if v == 0:
        return m
    w = m.tree.word
    opens, closes, parent = _layout(w)
    first = parent[v] + 1
    fa, fb, va = opens[first], closes[first], opens[v]
    moved = w[fa:fb + 1]
    return _marked(w[:fa] + w[fb + 1:va + 1] + moved + w[va + 1:], v - len(moved) // 2)


def map_D_to_B(m: MarkedTree, k: int, l: int) -> MarkedTree:
    _require(m, "D", k, l)
    v = m.mark
    if v == 0:
        return m
    w = m.tree.word
    opens, closes, parent = _layout(w)
    ua = opens[parent[v]]
    va = opens[v]
    wb = closes[v + 1]
    moved = w[va + 1:wb + 1]
    return _marked(w[:ua + 1] + moved + w[ua + 1:va + 1] + w[wb + 1:], v + len(moved) // 2)


def map_C_to_D(m: MarkedTree, k: int, l: int) -> MarkedTree:
    """Hang the right siblings of the marked leaf beneath it; mark its parent."""
    _require(m, "C", k, l)
    w = m.tree.word
    opens, closes, parent = _layout(w)
    v = m.mark
    u = parent[v]
    a, c = opens[v], closes[u]
    return _marked(w[:a + 1] + w[a + 2:c] + ")" + w[c:], u)


def map_D_to_C(m: MarkedTree, k: int, l: int) -> MarkedTree:
    """Flatten the children of the marked vertex's last child into siblings of it."""
    _require(m, "D", k, l)
    w = m.tree.word
    opens, closes, _ = _layout(w)
    u = m.mark
    c = closes[u]
    v = _last_child(opens, closes, u)
    a = opens[v]
    return _marked(w[:a] + "()" + w[a + 1:c - 1] + w[c:], v)


def _last_child(opens: list[int], closes: list[int], u: int) -> int:
    # the last child closes immediately before its parent does
    target = closes[u] - 1
    v = u + 1
    while closes[v] != target:
        v += (closes[v] - opens[v] + 1) // 2
    return v


Map = Callable[[MarkedTree, int, int], MarkedTree]

TO_D: dict[str, Map] = {"A": map_A_to_D, "B": map_B_to_D, "C": map_C_to_D}
FROM_D: dict[str, Map] = {"A": map_D_to_A, "B": map_D_to_B, "C": map_D_to_C}


def map_between(m: MarkedTree, source: str, target: str, k: int, l: int) -> MarkedTree:
    for c in (source, target):
        if c not in CLASSES:
            raise ValueError(f"unknown class {c!r}")
    _require(m, source, k, l)
    if source == target:
        return m
    if source != "D":
        m = TO_D[source](m, k, l)
    if target != "D":
        m = FROM_D[target](m, k, l)
    return m

