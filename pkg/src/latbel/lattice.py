"""Finite posets and lattices presented by cover relations.

A structure is declared by its elements (in a fixed input order that every
enumeration in this package follows) and its covering relation: ``(x, y)``
means y covers x, exactly the edges of a Hasse diagram.  The order itself is
the reflexive-transitive closure of the covers.

Poset and Lattice are immutable once built and every operation on them is a
pure read, so instances can be shared freely between threads.  Construction
is single-threaded.
"""

from __future__ import annotations

import heapq
import itertools
import warnings
from dataclasses import dataclass

from .errors import (
    CycleDetected,
    DecompositionNotUnique,
    DuplicateElement,
    InvalidElementName,
    NotALattice,
    RedundantCovers,
    SizeLimitExceeded,
    UnknownElement,
)

DEFAULT_MAX_ELEMENTS = 4096
DEFAULT_MAX_DOWNSETS = 1 << 20
DEFAULT_MAX_CHAINS = 10**6


class Poset:
    """A finite partially ordered set built from its covering relation.

    Redundant input pairs (duplicates and transitive edges) are dropped with
    a :class:`RedundantCovers` warning; the stored ``covers`` are always the
    irredundant covering relation of the closure.
    """

    __slots__ = ("elements", "covers", "_index", "_down", "_up", "_cov_down", "_cov_up")

    def __init__(self, elements, covers, *, max_elements: int = DEFAULT_MAX_ELEMENTS):
        names = list(elements)
        if not names:
            raise InvalidElementName("a poset needs at least one element")
        if len(names) > max_elements:
            raise SizeLimitExceeded(
                f"{len(names)} elements exceed the configured cap of {max_elements}"
            )
        index: dict[str, int] = {}
        for name in names:
            if not isinstance(name, str) or not name or any(ch.isspace() for ch in name):
                raise InvalidElementName(f"bad element name: {name!r}")
            if name in index:
                raise DuplicateElement(name)
            index[name] = len(index)
        n = len(names)

        edges: set[tuple[int, int]] = set()
        for lo, up in covers:
            for name in (lo, up):
                if name not in index:
                    raise UnknownElement(name)
            if lo == up:
                raise CycleDetected((lo,))
            edges.add((index[lo], index[up]))

        succ = [[] for _ in range(n)]
        pred = [[] for _ in range(n)]
        for a, b in sorted(edges):
            succ[a].append(b)
            pred[b].append(a)

        topo = _topological_order(n, succ, pred, names)

        down = [set() for _ in range(n)]
        for i in topo:
            acc = {i}
            for p in pred[i]:
                acc |= down[p]
            down[i] = acc
        up = [set() for _ in range(n)]
        for i in reversed(topo):
            acc = {i}
            for s in succ[i]:
                acc |= up[s]
            up[i] = acc

        # True covers of the closure: maximal strict lower bounds.
        cov: set[tuple[int, int]] = set()
        for b in range(n):
            strict = down[b] - {b}
            for a in strict:
                if not any(z != a and a in down[z] for z in strict):
                    cov.add((a, b))
        dropped = sorted(edges - cov)
        if dropped:
            listing = ", ".join(f"({names[a]}, {names[b]})" for a, b in dropped)
            warnings.warn(f"dropped redundant cover pairs: {listing}", RedundantCovers)

        self.elements: tuple[str, ...] = tuple(names)
        self._index = index
        self._down = down
        self._up = up
        self.covers: tuple[tuple[str, str], ...] = tuple(
            (names[a], names[b]) for a, b in sorted(cov)
        )
        self._cov_down = [sorted(a for a, b in cov if b == i) for i in range(n)]
        self._cov_up = [sorted(b for a, b in cov if a == i) for i in range(n)]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, name) -> bool:
        return name in self._index

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"

    def index_of(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(x) from None

    def leq(self, x: str, y: str) -> bool:
        """x <= y in the closure of the covers."""
        return self.index_of(x) in self._down[self.index_of(y)]

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    def below(self, x: str) -> frozenset[str]:
        """All elements <= x, including x."""
        return frozenset(self.elements[i] for i in self._down[self.index_of(x)])

    def above(self, x: str) -> frozenset[str]:
        return frozenset(self.elements[i] for i in self._up[self.index_of(x)])

    def covers_of(self, x: str) -> tuple[str, ...]:
        """Elements covered by x, in input order."""
        return tuple(self.elements[i] for i in self._cov_down[self.index_of(x)])

    def covered_by(self, x: str) -> tuple[str, ...]:
        """Elements covering x, in input order."""
        return tuple(self.elements[i] for i in self._cov_up[self.index_of(x)])

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self.elements) if not self._cov_down[i])

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self.elements) if not self._cov_up[i])

    def dual(self) -> "Poset":
        """Same elements with the order reversed."""
        return Poset(self.elements, [(u, l) for l, u in self.covers])

    def restrict(self, keep) -> "Poset":
        """Induced subposet on ``keep`` (ordered as in the parent)."""
        subset = set(keep)
        for x in subset:
            self.index_of(x)
        sub = [x for x in self.elements if x in subset]
        cov = []
        for a, b in itertools.permutations(sub, 2):
            if self.lt(a, b) and not any(
                self.lt(a, z) and self.lt(z, b) for z in sub
            ):
                cov.append((a, b))
        return Poset(sub, cov)

    def linear_extension(self) -> tuple[str, ...]:
        """Elements sorted so that x <= y implies x comes first (stable)."""
        order = sorted(range(len(self)), key=lambda i: (len(self._down[i]), i))
        return tuple(self.elements[i] for i in order)


def _topological_order(n, succ, pred, names):
    indeg = [len(pred[i]) for i in range(n)]
    ready = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(ready)
    topo = []
    while ready:
        i = heapq.heappop(ready)
        topo.append(i)
        for s in succ[i]:
            indeg[s] -= 1
            if indeg[s] == 0:
                heapq.heappush(ready, s)
    if len(topo) < n:
        remaining = set(range(n)) - set(topo)
        # Every remaining node keeps a remaining predecessor; walk until a repeat.
        v = min(remaining)
        path, seen = [], {}
        while v not in seen:
            seen[v] = len(path)
            path.append(v)
            v = next(u for u in pred[v] if u in remaining)
        cycle = list(reversed(path[seen[v]:]))
        raise CycleDetected(tuple(names[i] for i in cycle))
    return topo


def build_poset(elements, covers, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Poset:
    """Build a poset from declared elements and cover pairs ``(lower, upper)``."""
    return Poset(elements, covers, max_elements=max_elements)


class Lattice:
    """A finite lattice: a poset whose binary join and meet are total.

    Raises :class:`NotALattice` naming the first offending pair otherwise.
    """

    __slots__ = ("poset", "bottom", "top", "joinirr", "meetirr", "heights",
                 "_join", "_meet", "_h", "_coh", "_cache")

    def __init__(self, poset: Poset):
        self.poset = poset
        n = len(poset)
        names = poset.elements
        up, down = poset._up, poset._down

        join_t = [[0] * n for _ in range(n)]
        meet_t = [[0] * n for _ in range(n)]
        for i in range(n):
            join_t[i][i] = meet_t[i][i] = i
            for j in range(i + 1, n):
                ub = up[i] & up[j]
                if not ub:
                    raise NotALattice(names[i], names[j], "no-upper-bound")
                least = next((u for u in ub if ub <= up[u]), None)
                if least is None:
                    raise NotALattice(names[i], names[j], "no-least-upper-bound")
                join_t[i][j] = join_t[j][i] = least
                lb = down[i] & down[j]
                if not lb:
                    raise NotALattice(names[i], names[j], "no-lower-bound")
                greatest = next((u for u in lb if lb <= down[u]), None)
                if greatest is None:
                    raise NotALattice(names[i], names[j], "no-greatest-lower-bound")
                meet_t[i][j] = meet_t[j][i] = greatest
        self._join = join_t
        self._meet = meet_t

        self.bottom = poset.minimal_elements()[0]
        self.top = poset.maximal_elements()[0]
        self.joinirr = tuple(x for i, x in enumerate(names) if len(poset._cov_down[i]) == 1)
        self.meetirr = tuple(x for i, x in enumerate(names) if len(poset._cov_up[i]) == 1)

        h = [0] * n
        for x in poset.linear_extension():
            i = poset._index[x]
            h[i] = 1 + max((h[p] for p in poset._cov_down[i]), default=-1)
        coh = [0] * n
        for x in reversed(poset.linear_extension()):
            i = poset._index[x]
            coh[i] = 1 + max((coh[s] for s in poset._cov_up[i]), default=-1)
        self._h = h
        self._coh = coh
        self.heights = {x: h[poset._index[x]] for x in names}
        self._cache: dict = {}

    # -- delegation ---------------------------------------------------------

    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements

    @property
    def covers(self) -> tuple[tuple[str, str], ...]:
        return self.poset.covers

    def __len__(self) -> int:
        return len(self.poset)

    def __contains__(self, name) -> bool:
        return name in self.poset

    def __repr__(self) -> str:
        return f"Lattice({len(self)} elements, bottom={self.bottom!r}, top={self.top!r})"

    def leq(self, x: str, y: str) -> bool:
        return self.poset.leq(x, y)

    def join(self, x: str, y: str) -> str:
        p = self.poset
        return p.elements[self._join[p.index_of(x)][p.index_of(y)]]

    def meet(self, x: str, y: str) -> str:
        p = self.poset
        return p.elements[self._meet[p.index_of(x)][p.index_of(y)]]

    @property
    def atoms(self) -> tuple[str, ...]:
        return tuple(x for x in self.joinirr if self.heights[x] == 1)

    def height(self, x: str) -> int:
        return self._h[self.poset.index_of(x)]

    def coheight(self, x: str) -> int:
        """Length of a longest chain from x up to the top."""
        return self._coh[self.poset.index_of(x)]


def lattice_from_poset(p: Poset) -> Lattice:
    """Check that ``p`` carries total join/meet and wrap it as a Lattice."""
    return Lattice(p)


def join(l: Lattice, xs) -> str:
    """Join of a nonempty collection of elements (fold of the binary table)."""
    return _fold(l, xs, l.join)


def meet(l: Lattice, xs) -> str:
    """Meet of a nonempty collection of elements."""
    return _fold(l, xs, l.meet)


def _fold(l, xs, op):
    items = sorted(set(xs), key=l.poset.index_of)
    if not items:
        raise ValueError("join/meet of an empty collection")
    acc = items[0]
    for x in items[1:]:
        acc = op(acc, x)
    return acc


# -- irreducible decompositions ----------------------------------------------

def eta(l: Lattice, x: str) -> frozenset[str]:
    """Normal decomposition: all join-irreducibles <= x."""
    return frozenset(j for j in l.joinirr if l.leq(j, x))


def mu_set(l: Lattice, x: str) -> frozenset[str]:
    """All meet-irreducibles >= x."""
    return frozenset(m for m in l.meetirr if l.leq(x, m))


def eta_star(l: Lattice, x: str) -> frozenset[str]:
    """Minimal decomposition: the unique irredundant subset of eta(x) with join x.

    Only defined when the lattice is lower locally distributive; other
    lattices may have several irredundant decompositions, so we refuse.
    """
    if not is_lower_locally_distributive(l):
        raise DecompositionNotUnique(
            "minimal join decomposition requires a lower locally distributive lattice"
        )
    keep = [j for j in l.joinirr if l.leq(j, x)]
    changed = True
    while changed:
        changed = False
        for j in list(keep):
            rest = [o for o in keep if o != j]
            if _join_or_bottom(l, rest) == x:
                keep = rest
                changed = True
                break
    return frozenset(keep)


def mu_star(l: Lattice, x: str) -> frozenset[str]:
    """Unique irredundant subset of mu_set(x) with meet x (upper locally
    distributive lattices only)."""
    if not is_upper_locally_distributive(l):
        raise DecompositionNotUnique(
            "minimal meet decomposition requires an upper locally distributive lattice"
        )
    keep = [m for m in l.meetirr if l.leq(x, m)]
    changed = True
    while changed:
        changed = False
        for m in list(keep):
            rest = [o for o in keep if o != m]
            if _meet_or_top(l, rest) == x:
                keep = rest
                changed = True
                break
    return frozenset(keep)


def _join_or_bottom(l, xs):
    return join(l, xs) if xs else l.bottom


def _meet_or_top(l, xs):
    return meet(l, xs) if xs else l.top


# -- structural predicates ----------------------------------------------------

@dataclass(frozen=True)
class StructureProfile:
    """Structural flags of a lattice, with a counterexample for each false flag
    where one exists (existential failures such as autoduality carry none)."""

    is_lattice: bool
    is_linear: bool
    is_ranked: bool
    is_modular: bool
    is_lower_semimodular: bool
    is_upper_semimodular: bool
    is_distributive: bool
    is_lower_locally_distributive: bool
    is_upper_locally_distributive: bool
    is_complemented: bool
    is_atomistic: bool
    is_autodual: bool
    witnesses: dict

    def flags(self) -> dict[str, bool]:
        return {
            name: getattr(self, name)
            for name in (
                "is_lattice", "is_linear", "is_ranked", "is_modular",
                "is_lower_semimodular", "is_upper_semimodular", "is_distributive",
                "is_lower_locally_distributive", "is_upper_locally_distributive",
                "is_complemented", "is_atomistic", "is_autodual",
            )
        }


def _cached(l: Lattice, key: str, compute):
    if key not in l._cache:
        l._cache[key] = compute()
    return l._cache[key]


def _cover_pairs(l: Lattice) -> set[tuple[str, str]]:
    return _cached(l, "cover_pairs", lambda: set(l.covers))


def _covers(l, a, b) -> bool:
    """b covers a."""
    return (a, b) in _cover_pairs(l)


def _semimodular_witness(l: Lattice, upper: bool):
    for x, y in itertools.combinations(l.elements, 2):
        j, m = l.join(x, y), l.meet(x, y)
        low = _covers(l, m, x) and _covers(l, m, y)
        high = _covers(l, x, j) and _covers(l, y, j)
        if upper and low and not high:
            return (x, y)
        if not upper and high and not low:
            return (x, y)
    return None


def is_upper_semimodular(l: Lattice) -> bool:
    return _cached(l, "usm", lambda: _semimodular_witness(l, True)) is None


def is_lower_semimodular(l: Lattice) -> bool:
    return _cached(l, "lsm", lambda: _semimodular_witness(l, False)) is None


def _distributive_witness(l: Lattice):
    for x, y, z in itertools.product(l.elements, repeat=3):
        if l.meet(l.join(x, y), z) != l.join(l.meet(x, z), l.meet(y, z)):
            return (x, y, z)
    return None


def is_distributive(l: Lattice) -> bool:
    return _cached(l, "distr", lambda: _distributive_witness(l)) is None


def _diamond_witness(l: Lattice):
    """A triple of incomparable elements with equal pairwise meets and joins,
    i.e. an embedded five-element diamond sublattice."""
    for u, v, w in itertools.combinations(l.elements, 3):
        p = l.meet(u, v)
        if l.meet(u, w) != p or l.meet(v, w) != p:
            continue
        q = l.join(u, v)
        if l.join(u, w) != q or l.join(v, w) != q:
            continue
        if p != q and p not in (u, v, w) and q not in (u, v, w):
            return (u, v, w)
    return None


def is_lower_locally_distributive(l: Lattice) -> bool:
    def compute():
        w = _cached(l, "lsm", lambda: _semimodular_witness(l, False))
        if w is not None:
            return w
        return _cached(l, "diamond", lambda: _diamond_witness(l))
    return _cached(l, "lld", compute) is None


def is_upper_locally_distributive(l: Lattice) -> bool:
    def compute():
        w = _cached(l, "usm", lambda: _semimodular_witness(l, True))
        if w is not None:
            return w
        return _cached(l, "diamond", lambda: _diamond_witness(l))
    return _cached(l, "uld", compute) is None


def _complement_witness(l: Lattice):
    for x in l.elements:
        if not any(
            l.meet(x, c) == l.bottom and l.join(x, c) == l.top for c in l.elements
        ):
            return (x,)
    return None


def _atomistic_witness(l: Lattice):
    for j in l.joinirr:
        if l.heights[j] != 1:
            return (j,)
    return None


def _linear_witness(l: Lattice):
    for x, y in itertools.combinations(l.elements, 2):
        if not l.leq(x, y) and not l.leq(y, x):
            return (x, y)
    return None


def _ranked_witness(l: Lattice):
    for a, b in l.covers:
        if l.heights[b] != l.heights[a] + 1:
            return (a, b)
    return None


def profile(l: Lattice) -> StructureProfile:
    """Decide every structural flag, collecting counterexample witnesses."""
    def compute():
        from .duality import find_negations  # deferred: duality imports this module

        witnesses = {}

        def flag(name, witness):
            if witness is not None:
                witnesses[name] = witness
            return witness is None

        linear = flag("is_linear", _linear_witness(l))
        ranked = flag("is_ranked", _ranked_witness(l))
        lsm = flag("is_lower_semimodular", _cached(l, "lsm", lambda: _semimodular_witness(l, False)))
        usm = flag("is_upper_semimodular", _cached(l, "usm", lambda: _semimodular_witness(l, True)))
        if not lsm:
            witnesses["is_modular"] = witnesses["is_lower_semimodular"]
        elif not usm:
            witnesses["is_modular"] = witnesses["is_upper_semimodular"]
        distr = flag("is_distributive", _cached(l, "distr", lambda: _distributive_witness(l)))
        diamond = _cached(l, "diamond", lambda: _diamond_witness(l))
        lld = lsm and diamond is None
        if not lld:
            witnesses["is_lower_locally_distributive"] = (
                witnesses.get("is_lower_semimodular") or diamond
            )
        uld = usm and diamond is None
        if not uld:
            witnesses["is_upper_locally_distributive"] = (
                witnesses.get("is_upper_semimodular") or diamond
            )
        compl = flag("is_complemented", _complement_witness(l))
        atomistic = flag("is_atomistic", _atomistic_witness(l))
        autodual = bool(find_negations(l, limit=1))

        return StructureProfile(
            is_lattice=True,
            is_linear=linear,
            is_ranked=ranked,
            is_modular=lsm and usm,
            is_lower_semimodular=lsm,
            is_upper_semimodular=usm,
            is_distributive=distr,
            is_lower_locally_distributive=lld,
            is_upper_locally_distributive=uld,
            is_complemented=compl,
            is_atomistic=atomistic,
            is_autodual=autodual,
            witnesses=witnesses,
        )

    return _cached(l, "profile", compute)


# -- downsets and chains -------------------------------------------------------

@dataclass(frozen=True)
class DownsetLattice:
    """Lattice of all downsets of a poset, ordered by inclusion.

    ``downset`` maps each lattice element name back to the underlying set of
    poset elements; ``principal`` maps each poset element j to the lattice
    element holding its principal downset (these are exactly the
    join-irreducibles of the lattice).
    """

    lattice: Lattice
    downset: dict
    principal: dict


def downset_lattice(p: Poset, *, max_downsets: int = DEFAULT_MAX_DOWNSETS) -> DownsetLattice:
    """All downsets of ``p`` ordered by inclusion; join is union, meet is
    intersection.  Elements are named by their member sets, e.g. ``{a,b}``."""
    n = len(p)
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        d = frontier.pop()
        for i in range(n):
            if i not in d and p._down[i] - {i} <= d:
                nd = d | {i}
                if nd not in seen:
                    seen.add(nd)
                    if len(seen) > max_downsets:
                        raise SizeLimitExceeded(
                            f"more than {max_downsets} downsets; raise the cap to proceed"
                        )
                    frontier.append(nd)

    downsets = sorted(seen, key=lambda d: (len(d), sorted(d)))

    def name_of(d):
        return "{" + ",".join(p.elements[i] for i in sorted(d)) + "}"

    names = [name_of(d) for d in downsets]
    covers = []
    for d in downsets:
        dn = name_of(d)
        for i in range(n):
            if i not in d and p._down[i] - {i} <= d:
                covers.append((dn, name_of(d | {i})))
    lat = Lattice(Poset(names, covers, max_elements=max(len(names), DEFAULT_MAX_ELEMENTS)))
    back = {name_of(d): frozenset(p.elements[i] for i in d) for d in downsets}
    principal = {x: name_of(frozenset(p._down[p.index_of(x)])) for x in p.elements}
    return DownsetLattice(lattice=lat, downset=back, principal=principal)


def boolean_lattice(atom_names) -> Lattice:
    """The lattice of all subsets of the given atoms (downsets of an antichain)."""
    return downset_lattice(Poset(list(atom_names), [])).lattice


def maximal_chains(l: Lattice, *, max_chains: int = DEFAULT_MAX_CHAINS) -> list[tuple[str, ...]]:
    """All maximal chains from bottom to top, each as an ordered element tuple."""
    p = l.poset
    out: list[tuple[str, ...]] = []
    stack = [(l.bottom, (l.bottom,))]
    while stack:
        x, path = stack.pop()
        if x == l.top:
            out.append(path)
            if len(out) > max_chains:
                raise SizeLimitExceeded(f"more than {max_chains} maximal chains")
            continue
        for nxt in reversed(p.covered_by(x)):
            stack.append((nxt, path + (nxt,)))
    return out


def dual_lattice(l: Lattice) -> Lattice:
    """The same elements with all covers reversed."""
    return Lattice(l.poset.dual())
