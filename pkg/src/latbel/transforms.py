"""The Moebius function of a lattice and the associated function transforms.

For a function f on the lattice, its Moebius transform is the unique m with
f(x) = sum of m(y) over y <= x; the zeta transform is that summation itself.
The co-Moebius transform of m sums upward instead: q(x) = sum of m(y) over
y >= x, and has its own inverse obtained by Moebius inversion of the dual
order.  All arithmetic is double precision except the Moebius coefficients,
which are exact integers.
"""

from __future__ import annotations

from .errors import IncompleteFunction, UnknownElement
from .lattice import Lattice


class SetFunction:
    """A total real-valued assignment on the elements of one lattice."""

    __slots__ = ("lattice", "values")

    def __init__(self, lattice: Lattice, values):
        vals = dict(values)
        extra = [x for x in vals if x not in lattice]
        if extra:
            raise UnknownElement(extra[0])
        missing = [x for x in lattice.elements if x not in vals]
        if missing:
            raise IncompleteFunction(missing)
        self.lattice = lattice
        self.values = {x: float(vals[x]) for x in lattice.elements}

    def __getitem__(self, x: str) -> float:
        try:
            return self.values[x]
        except KeyError:
            raise UnknownElement(x) from None

    def items(self):
        """(element, value) pairs in lattice input order."""
        return self.values.items()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.values!r})"


class MobiusMatrix:
    """The two-variable Moebius function mu(x, y) of a lattice, for x <= y.

    mu(x, x) = 1 and, for x < y, the values on the half-open interval
    [x, y) sum to -mu(x, y); pairs with x not below y give 0.
    """

    __slots__ = ("lattice", "_rows")

    def __init__(self, lattice: Lattice):
        self.lattice = lattice
        p = lattice.poset
        n = len(p)
        order = [p.index_of(x) for x in p.linear_extension()]
        down = p._down
        rows = [dict() for _ in range(n)]
        for x in range(n):
            row = rows[x]
            for y in order:
                if x not in down[y]:
                    continue
                if y == x:
                    row[y] = 1
                else:
                    row[y] = -sum(v for t, v in row.items() if t != y and t in down[y])
        self._rows = rows

    def mu(self, x: str, y: str) -> int:
        p = self.lattice.poset
        return self._rows[p.index_of(x)].get(p.index_of(y), 0)


def mobius_function(l: Lattice) -> MobiusMatrix:
    """Moebius coefficients of the lattice (depends only on the order), cached."""
    if "mobius" not in l._cache:
        l._cache["mobius"] = MobiusMatrix(l)
    return l._cache["mobius"]


def mobius_transform(f: SetFunction) -> SetFunction:
    """m with f(x) = sum of m(y) over y <= x."""
    l = f.lattice
    mat = mobius_function(l)._rows
    p = l.poset
    vals = {}
    for x in l.elements:
        i = p.index_of(x)
        total = 0.0
        for j, y in enumerate(l.elements):
            c = mat[j].get(i, 0)
            if c:
                total += c * f.values[y]
        vals[x] = total
    return SetFunction(l, vals)


def zeta_transform(m: SetFunction) -> SetFunction:
    """f(x) = sum of m(y) over y <= x; inverse of the Moebius transform."""
    l = m.lattice
    p = l.poset
    vals = {}
    for x in l.elements:
        below = p._down[p.index_of(x)]
        vals[x] = sum(m.values[l.elements[i]] for i in sorted(below))
    return SetFunction(l, vals)


def comobius_transform(m: SetFunction) -> SetFunction:
    """q(x) = sum of m(y) over y >= x (the commonality side)."""
    l = m.lattice
    p = l.poset
    vals = {}
    for x in l.elements:
        above = p._up[p.index_of(x)]
        vals[x] = sum(m.values[l.elements[i]] for i in sorted(above))
    return SetFunction(l, vals)


def mass_from_comobius(q: SetFunction) -> SetFunction:
    """Invert the co-Moebius transform: m(x) recovered by Moebius inversion of
    the reversed order, so that comobius_transform(result) equals q."""
    l = q.lattice
    mat = mobius_function(l)._rows
    p = l.poset
    vals = {}
    for x in l.elements:
        row = mat[p.index_of(x)]
        vals[x] = sum(c * q.values[l.elements[y]] for y, c in sorted(row.items()) if c)
    return SetFunction(l, vals)
