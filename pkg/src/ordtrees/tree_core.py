"""Rooted ordered trees: text form, exhaustive generation and vertex statistics.

A tree is stored as the ordered tuple of its root's child subtrees.  Vertices
are addressed by their 0-based preorder index, the root being 0.  The text
form is the balanced-parenthesis word in which every edge contributes one
``(`` when it is descended and one ``)`` when it is climbed back; the root
itself is implicit, so the single-vertex tree is the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator


class MalformedInputError(ValueError):
    """Raised when a text literal cannot be parsed."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class Tree:
    """An ordered rooted tree, identified by its parenthesis word.

    Child subtrees are decoded from the word on first access.
    """

    __slots__ = ("word", "_children")

    def __init__(self, children: Iterable[Tree] = ()):
        kids = tuple(children)
        self.word = "".join(["(" + c.word + ")" for c in kids])
        self._children = kids

    @classmethod
    def _from_word(cls, word: str) -> Tree:
        # caller guarantees ``word`` is balanced
        t = object.__new__(cls)
        t.word = word
        t._children = None
        return t

    @classmethod
    def parse(cls, text: str) -> Tree:
        return parse(text)

    @property
    def children(self) -> tuple[Tree, ...]:
        if self._children is None:
            kids = []
            depth = start = 0
            for i, ch in enumerate(self.word):
                if ch == "(":
                    if depth == 0:
                        start = i
                    depth += 1
                else:
                    depth -= 1
                    if depth == 0:
                        kids.append(Tree._from_word(self.word[start + 1:i]))
            self._children = tuple(kids)
        return self._children

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __str__(self) -> str:
        return self.word

    def __repr__(self) -> str:
        return f"Tree({self.word!r})"

    @property
    def edges(self) -> int:
        return len(self.word) // 2

    @property
    def outdegree(self) -> int:
        return len(self.children)

    @property
    def size(self) -> int:
        return self.edges + 1

    def preorder(self) -> Iterator[Tree]:
        """Yield the subtree rooted at every vertex, in preorder."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def subtree(self, v: int) -> Tree:
        """Subtree rooted at the vertex with preorder index ``v``."""
        _check_index(self, v)
        for i, node in enumerate(self.preorder()):
            if i == v:
                return node
        raise AssertionError("unreachable")


@dataclass(frozen=True, slots=True)
class MarkedTree:
    """A tree with one distinguished vertex, given by preorder index."""

    tree: Tree
    mark: int

    def __post_init__(self):
        _check_index(self.tree, self.mark)

    @classmethod
    def parse(cls, text: str) -> MarkedTree:
        word, sep, index = text.strip().rpartition("@")
        if not sep:
            raise MalformedInputError(f"marked tree {text!r} lacks '@<index>'")
        try:
            mark = int(index)
        except ValueError:
            raise MalformedInputError(
                f"bad vertex index {index!r}", len(word) + 1) from None
        tree = parse(word)
        if not 0 <= mark <= tree.edges:
            raise MalformedInputError(
                f"vertex index {mark} out of range 0..{tree.edges}", len(word) + 1)
        return cls(tree, mark)

    def __str__(self) -> str:
        return f"{serialize(self.tree)}@{self.mark}"

    @property
    def stats(self) -> VertexStats:
        return stats(self.tree, self.mark)


@dataclass(frozen=True, slots=True)
class VertexStats:
    level: int
    degree: int
    outdegree: int
    elder_siblings: int
    is_first_child: bool
    is_leaf: bool


def parse(text: str) -> Tree:
    """Parse a balanced-parenthesis word into a tree."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            if depth == 0:
                raise MalformedInputError("unbalanced ')'", i)
            depth -= 1
        else:
            raise MalformedInputError(f"stray character {ch!r}", i)
    if depth:
        raise MalformedInputError("unbalanced '(': word ends inside a subtree", len(text))
    return Tree._from_word(text)


def serialize(tree: Tree) -> str:
    return tree.word


def enumerate_words(n: int) -> Iterator[str]:
    """Balanced-parenthesis words with ``n`` pairs, lexicographic with '(' < ')'."""
    if n < 0:
        raise ValueError("edge count must be non-negative")
    buf = [""] * (2 * n)

    def extend(pos: int, opened: int, depth: int) -> Iterator[str]:
        if pos == 2 * n:
            yield "".join(buf)
            return
        if opened < n:
            buf[pos] = "("
            yield from extend(pos + 1, opened + 1, depth + 1)
        if depth > 0:
            buf[pos] = ")"
            yield from extend(pos + 1, opened, depth - 1)

    return extend(0, 0, 0)


def enumerate_trees(n: int) -> Iterator[Tree]:
    """Every tree with ``n`` edges exactly once, in lexicographic word order."""
    return (parse(w) for w in enumerate_words(n))


def all_stats(tree: Tree) -> list[VertexStats]:
    """Statistics of every vertex, indexed by preorder position."""
    size = tree.edges + 1
    level = [0] * size
    outdeg = [0] * size
    elder = [0] * size
    stack = [0]
    nxt = 1
    for ch in tree.word:
        if ch == "(":
            p = stack[-1]
            elder[nxt] = outdeg[p]
            outdeg[p] += 1
            level[nxt] = len(stack)
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return [
        VertexStats(
            level=level[v],
            degree=outdeg[v] + (v > 0),
            outdegree=outdeg[v],
            elder_siblings=elder[v],
            is_first_child=v > 0 and elder[v] == 0,
            is_leaf=outdeg[v] == 0,
        )
        for v in range(size)
    ]


def stats(tree: Tree, v: int) -> VertexStats:
    _check_index(tree, v)
    return all_stats(tree)[v]


def parent_indices(tree: Tree) -> list[int]:
    """Preorder index of each vertex's parent; -1 for the root."""
    parents: list[int] = []
    stack = [(tree, -1)]
    while stack:
        node, p = stack.pop()
        me = len(parents)
        parents.append(p)
        stack.extend((c, me) for c in reversed(node.children))
    return parents


def total_vertex_count(n: int) -> int:
    """Number of vertices summed over all trees with ``n`` edges."""
    if n < 0:
        raise ValueError("edge count must be non-negative")
    return comb(2 * n, n)


def _check_index(tree: Tree, v: int) -> None:
    if not 0 <= v <= tree.edges:
        raise IndexError(f"vertex {v} out of range 0..{tree.edges} for {serialize(tree)!r}")
