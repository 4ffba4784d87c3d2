"""Lattice paths and the two preorder encodings of trees as Dyck paths.

``phi`` records an Up for every edge descended and a Down for every edge
climbed, so it is the parenthesis word with ``(``/``)`` read as ``U``/``D``.
``psi`` walks the vertices in preorder and writes ``outdegree`` Ups and one
Down for each of them, skipping the last vertex (always a leaf).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .tree_core import MalformedInputError, Tree, parse, serialize

UP = "U"
DOWN = "D"

_PATH_RE = re.compile(r"^([UD]*)(?:@\((-?\d+),(-?\d+)\))?$")


class PathError(ValueError):
    """A path does not have the shape an operation requires."""


@dataclass(frozen=True, slots=True)
class LatticePath:
    steps: str = ""
    start: tuple[int, int] = (0, 0)

    def __post_init__(self):
        if self.steps.strip("UD"):
            raise MalformedInputError(f"path word may only contain U and D: {self.steps!r}")

    @classmethod
    def parse(cls, text: str) -> LatticePath:
        m = _PATH_RE.match(text.strip())
        if m is None:
            raise MalformedInputError(f"bad path literal {text!r}", _first_bad(text.strip()))
        word, x, y = m.groups()
        start = (int(x), int(y)) if x is not None else (0, 0)
        return cls(word, start)

    def __str__(self) -> str:
        if self.start == (0, 0):
            return self.steps
        return f"{self.steps}@({self.start[0]},{self.start[1]})"

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def ups(self) -> int:
        return self.steps.count(UP)

    @property
    def downs(self) -> int:
        return self.steps.count(DOWN)

    @property
    def end(self) -> tuple[int, int]:
        x0, y0 = self.start
        return x0 + len(self.steps), y0 + self.ups - self.downs

    def heights(self) -> list[int]:
        """Height of every lattice point, the start point included."""
        h = self.start[1]
        out = [h]
        for s in self.steps:
            h += 1 if s == UP else -1
            out.append(h)
        return out

    def is_dyck(self) -> bool:
        hs = self.heights()
        return self.start == (0, 0) and hs[-1] == 0 and min(hs) >= 0

    def __add__(self, other: LatticePath) -> LatticePath:
        # concatenation; the right operand's start point is ignored
        return LatticePath(self.steps + other.steps, self.start)


def _first_bad(text: str) -> int:
    for i, ch in enumerate(text):
        if ch not in "UD":
            return i
    return len(text)


def _as_path(p: LatticePath | str) -> LatticePath:
    return p if isinstance(p, LatticePath) else LatticePath.parse(p)


def check_dyck(p: LatticePath) -> None:
    if p.start != (0, 0):
        raise PathError(f"not a Dyck path: starts at {p.start}")
    h = 0
    for i, s in enumerate(p.steps):
        h += 1 if s == UP else -1
        if h < 0:
            raise PathError(f"not a Dyck path: goes below 0 after step {i + 1}")
    if h != 0:
        raise PathError(f"not a Dyck path: ends at height {h}")


def phi(tree: Tree) -> LatticePath:
    return LatticePath(serialize(tree).replace("(", UP).replace(")", DOWN))


def phi_inv(path: LatticePath | str) -> Tree:
    path = _as_path(path)
    check_dyck(path)
    return parse(path.steps.replace(UP, "(").replace(DOWN, ")"))


def phi_forest(forest: Iterable[Tree]) -> LatticePath:
    return LatticePath("".join(phi(t).steps for t in forest))


def psi(tree: Tree) -> LatticePath:
    nodes = list(tree.preorder())
    # the last preorder vertex is a leaf and writes nothing
    return LatticePath("".join(UP * len(t.children) + DOWN for t in nodes[:-1]))


def outdegrees_to_tree(outdegrees: Sequence[int]) -> Tree:
    """Rebuild a tree from its preorder outdegree sequence."""
    frames: list[tuple[int, list[Tree]]] = []
    result = None
    for k in outdegrees:
        if result is not None:
            raise PathError("outdegree sequence has vertices left over after the tree closes")
        frames.append((k, []))
        while frames and len(frames[-1][1]) == frames[-1][0]:
            _, kids = frames.pop()
            node = Tree(tuple(kids))
            if frames:
                frames[-1][1].append(node)
            else:
                result = node
    if result is None:
        raise PathError("outdegree sequence ends before the tree is complete")
    return result


def psi_inv(path: LatticePath | str) -> Tree:
    path = _as_path(path)
    check_dyck(path)
    outdegrees = []
    run = 0
    for s in path.steps:
        if s == UP:
            run += 1
        else:
            outdegrees.append(run)
            run = 0
    outdegrees.append(0)
    return outdegrees_to_tree(outdegrees)


def first_hit(path: LatticePath, level: int) -> int:
    """Number of steps taken before the path first stands at height ``level``."""
    for i, h in enumerate(path.heights()):
        if h == level:
            return i
    raise PathError(f"path {path} never reaches height {level}")


def flip(steps: str) -> str:
    return steps.translate(_FLIP)


_FLIP = str.maketrans({UP: DOWN, DOWN: UP})


def reflect_suffix(path: LatticePath | str, level: int) -> LatticePath:
    """Reflect the part of ``path`` after its first visit to ``level`` about y = level."""
    path = _as_path(path)
    i = first_hit(path, level)
    # unit steps cannot jump over a level, so the prefix lies strictly on one side
    side = path.start[1] > level
    assert all((h > level) == side for h in path.heights()[:i])
    return LatticePath(path.steps[:i] + flip(path.steps[i:]), path.start)
