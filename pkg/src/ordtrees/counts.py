"""Closed-form vertex counts over all rooted ordered trees with ``n`` edges.

Everything is exact integer arithmetic.  Formulas with a rational prefactor
multiply first and divide last, and a non-zero remainder is treated as a bug.
Parameters outside the feasible range give 0.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache


class DivisibilityError(ArithmeticError):
    """An exact division left a remainder; the formula code is wrong."""


@lru_cache(maxsize=None)
def _binomial(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    b = min(b, a - b)
    num = den = 1
    for i in range(1, b + 1):
        num *= a - b + i
        den *= i
    return num // den


def binomial(a: int, b: int) -> int:
    """``C(a, b)``; zero when ``b < 0`` or ``b > a``."""
    return _binomial(a, b)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise DivisibilityError(f"{num} is not divisible by {den}")
    return q


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return exact_div(binomial(2 * n, n), n + 1)


def half_vertices(n: int) -> int:
    """Common size of the first-child, non-first-child, leaf and non-leaf sets."""
    if n < 1:
        raise ValueError("n must be positive")
    return exact_div(binomial(2 * n, n), 2)


def count_class(n: int, k: int, l: int) -> int:
    """Size of each of the classes A, B, C, D for ``k, l >= 1``."""
    if n < 1 or k < 1 or l < 1 or k > n or l > n:
        return 0
    return exact_div((k + 2 * l - 2) * binomial(2 * n - k, n + l - 1), 2 * n - k)


def count_cumulative(n: int, k: int, l: int) -> int:
    """Vertices with outdegree at least ``k`` and level at least ``l``."""
    if n < 0 or k < 0 or l < 0:
        return 0
    return binomial(2 * n - k, n + l)


def count_outdeg_level(n: int, k: int, l: int) -> int:
    """Vertices of outdegree exactly ``k`` at level exactly ``l``, by inclusion-exclusion."""
    if n < 0 or k < 0 or l < 0:
        return 0
    return (count_cumulative(n, k, l) - count_cumulative(n, k + 1, l)
            - count_cumulative(n, k, l + 1) + count_cumulative(n, k + 1, l + 1))


def outdeg_level_closed_form(n: int, k: int, l: int) -> int:
    if n < 1 or k < 0 or l < 0 or k > n or l > n:
        return 0
    return exact_div((k + 2 * l) * binomial(2 * n - k, n + l), 2 * n - k)


def count_by_degree(n: int, k: int) -> int:
    """Non-leaves of outdegree ``k`` (equally: first-children of degree ``k``)."""
    if n < 1 or k < 1:
        return 0
    return binomial(2 * n - k - 1, n - 1)


def count_by_level(n: int, l: int) -> int:
    """Leaves at level ``l`` (equally: first-children at level ``l``)."""
    if n < 1 or l < 1:
        return 0
    return exact_div(l * binomial(2 * n, n + l), n)


def count_degree(n: int, k: int) -> int:
    """All vertices of degree ``k``: first-children plus non-first-children."""
    return 2 * count_by_degree(n, k)


def count_degree_level(n: int, k: int, l: int) -> int:
    """Vertices of degree ``k >= 1`` at level ``l >= 0``."""
    return count_class(n, k, l) + count_class(n, k, l + 1)


def telescope_by_level(n: int, k: int, l: int) -> tuple[int, int]:
    """Both sides of the identity that sums count_class over ``l``.

    Returns ``(lhs, rhs)`` scaled by ``2n - k`` so no division is needed.
    """
    lhs = (k + 2 * l - 2) * binomial(2 * n - k, n + l - 1)
    rhs = (2 * n - k) * (binomial(2 * n - k - 1, n + l - 2)
                         - binomial(2 * n - k - 1, n + l - 1))
    return lhs, rhs


def telescope_by_degree(n: int, k: int, l: int) -> tuple[int, int]:
    """Both sides of the identity that sums count_class over ``k``.

    Cleared of denominators by multiplying through by ``(2n-k)(2n-k+1)``.
    """
    a, b = 2 * n - k, 2 * n - k + 1
    lhs = (k + 2 * l - 2) * binomial(a, n + l - 1) * b
    rhs = ((k + 2 * l - 1) * binomial(b, n + l) * a
           - (k + 2 * l) * binomial(a, n + l) * b)
    return lhs, rhs


FORMULAS = {
    "catalan": (catalan, ("n",)),
    "half": (half_vertices, ("n",)),
    "vertices": (lambda n: binomial(2 * n, n), ("n",)),
    "class": (count_class, ("n", "k", "l")),
    "cumulative": (count_cumulative, ("n", "k", "l")),
    "outdeg-level": (count_outdeg_level, ("n", "k", "l")),
    "degree": (count_by_degree, ("n", "k")),
    "level": (count_by_level, ("n", "l")),
}


@dataclass
class CountTable:
    """Exact counts keyed by ``(k, l, statistic)`` for one edge count ``n``.

    Statistics that ignore ``k`` or ``l`` store that coordinate as -1.
    """

    n: int
    entries: dict[tuple[int, int, str], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int, str]) -> int:
        return self.entries.get(key, 0)

    def add(self, key: tuple[int, int, str], amount: int = 1) -> None:
        self.entries[key] = self.entries.get(key, 0) + amount

    def merge(self, other: CountTable) -> CountTable:
        if other.n != self.n:
            raise ValueError("cannot merge tables for different n")
        out = CountTable(self.n, dict(self.entries))
        for key, c in other.entries.items():
            out.add(key, c)
        return out

    def records(self) -> list[tuple[int, int, int, str, int]]:
        rows = [(self.n, k, l, stat, c) for (k, l, stat), c in self.entries.items()]
        rows.sort(key=lambda r: (r[3], r[1], r[2]))
        return rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountTable):
            return NotImplemented
        strip = lambda t: {k: v for k, v in t.entries.items() if v}
        return self.n == other.n and strip(self) == strip(other)


HEADER = ("n", "k", "l", "statistic", "count")


def to_csv(tables: list[CountTable]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for t in tables:
        w.writerows(t.records())
    return buf.getvalue()


def to_json(tables: list[CountTable]) -> str:
    rows = [dict(zip(HEADER, r)) for t in tables for r in t.records()]
    return json.dumps(rows, indent=1) + "\n"


def formula_table(n: int) -> CountTable:
    """The closed-form values over the full feasible ``(k, l)`` range."""
    t = CountTable(n)
    for k in range(0, n + 1):
        for l in range(0, n + 1):
            t.entries[(k, l, "cumulative")] = count_cumulative(n, k, l)
            t.entries[(k, l, "outdeg-level")] = count_outdeg_level(n, k, l)
            if k >= 1 and l >= 1:
                t.entries[(k, l, "class")] = count_class(n, k, l)
    for k in range(1, n + 1):
        t.entries[(k, -1, "degree")] = count_by_degree(n, k)
    for l in range(1, n + 1):
        t.entries[(-1, l, "level")] = count_by_level(n, l)
    return t
