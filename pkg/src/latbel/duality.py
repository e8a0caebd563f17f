"""Negations: bijections that turn joins into meets.

A vee-negation is a bijection n with n(x v y) = n(x) ^ n(y) and n(top) =
bottom; such a map exists exactly when the lattice is isomorphic to its own
order dual.  Negations need not be involutive and are rarely unique, so the
search below enumerates them in a canonical order: the partial map is
extended along the input element order, trying candidate images in input
order, which makes "the first negation" stable across runs.
"""

from __future__ import annotations

import itertools

from .capacity import CheckResult
from .errors import (
    InvalidNegation,
    NoConsistentExtension,
    NotABijection,
    NotDistributive,
    UnknownElement,
)
from .lattice import Lattice, eta, is_distributive, meet


class Negation:
    """A verified vee-negation (kind "vee") or its inverse wedge-negation
    (kind "wedge"), with the inverse bijection precomputed."""

    __slots__ = ("lattice", "kind", "map", "inverse_map")

    def __init__(self, lattice: Lattice, mapping, kind: str = "vee", _verified: bool = False):
        if kind not in ("vee", "wedge"):
            raise ValueError(f"kind must be 'vee' or 'wedge', got {kind!r}")
        mapping = dict(mapping)
        if not _verified and kind == "vee":
            res = verify_vee_negation(lattice, mapping)
            if not res:
                raise InvalidNegation(res.detail)
        self.lattice = lattice
        self.kind = kind
        self.map = {x: mapping[x] for x in lattice.elements}
        self.inverse_map = {v: k for k, v in self.map.items()}

    def __call__(self, x: str) -> str:
        try:
            return self.map[x]
        except KeyError:
            raise UnknownElement(x) from None

    def inverse(self, x: str) -> str:
        try:
            return self.inverse_map[x]
        except KeyError:
            raise UnknownElement(x) from None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Negation)
            and other.lattice is self.lattice
            and other.kind == self.kind
            and other.map == self.map
        )

    def __hash__(self):
        return hash((id(self.lattice), self.kind, tuple(sorted(self.map.items()))))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{k}->{v}" for k, v in self.map.items())
        return f"Negation[{self.kind}]({pairs})"


def verify_vee_negation(l: Lattice, mapping) -> CheckResult:
    """True iff the map is a bijection sending top to bottom that satisfies
    n(x v y) = n(x) ^ n(y) on all pairs; the witness names the first failure.

    Raises :class:`NotABijection` when the map is not even a total self-map
    of the element set.
    """
    mapping = dict(mapping)
    for x in l.elements:
        if x not in mapping:
            raise NotABijection(f"map gives no image for {x!r}")
    for x, img in mapping.items():
        if x not in l:
            raise NotABijection(f"map defined on foreign element {x!r}")
        if img not in l:
            raise NotABijection(f"image {img!r} of {x!r} is not a lattice element")
    seen: dict[str, str] = {}
    for x in l.elements:
        img = mapping[x]
        if img in seen:
            return CheckResult(False, (seen[img], x), f"both map to {img!r}")
        seen[img] = x
    if mapping[l.top] != l.bottom:
        return CheckResult(False, (l.top,), f"n(top) = {mapping[l.top]!r}, expected bottom")
    for x, y in itertools.combinations_with_replacement(l.elements, 2):
        lhs = mapping[l.join(x, y)]
        rhs = l.meet(mapping[x], mapping[y])
        if lhs != rhs:
            return CheckResult(False, (x, y), f"n({x} v {y}) = {lhs!r} but n({x}) ^ n({y}) = {rhs!r}")
    return CheckResult(True)


def negation_from_map(l: Lattice, mapping) -> Negation:
    """Verify a raw mapping and wrap it; raises InvalidNegation on failure."""
    return Negation(l, mapping, "vee")


def find_negations(l: Lattice, limit: int | None = 1) -> list[Negation]:
    """Enumerate vee-negations by backtracking over the cover structure.

    A negation is exactly an anti-automorphism, so candidate images must
    swap height with coheight and up-degree with down-degree; those pruning
    invariants only shrink the search, correctness rests on the pairwise
    order checks.  Returns up to ``limit`` negations (all of them when limit
    is None); the empty list means the lattice is not autodual.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be at least 1")
    p = l.poset
    n = len(p)
    down = p._down
    updeg = [len(p._cov_up[i]) for i in range(n)]
    downdeg = [len(p._cov_down[i]) for i in range(n)]
    want = [(l._coh[i], l._h[i], downdeg[i], updeg[i]) for i in range(n)]
    have = [(l._h[i], l._coh[i], updeg[i], downdeg[i]) for i in range(n)]

    assignment = [-1] * n
    used = [False] * n
    results: list[Negation] = []

    def extend(i: int) -> bool:
        if i == n:
            names = p.elements
            results.append(
                Negation(l, {names[x]: names[assignment[x]] for x in range(n)},
                         "vee", _verified=True)
            )
            return limit is not None and len(results) >= limit
        for c in range(n):
            if used[c] or have[c] != want[i]:
                continue
            ok = True
            for j in range(i):
                a = assignment[j]
                # x <= y must hold exactly when n(y) <= n(x)
                if (j in down[i]) != (c in down[a]) or (i in down[j]) != (a in down[c]):
                    ok = False
                    break
            if not ok:
                continue
            assignment[i] = c
            used[c] = True
            stop = extend(i + 1)
            used[c] = False
            assignment[i] = -1
            if stop:
                return True
        return False

    extend(0)
    return results


def invert(n: Negation) -> Negation:
    """The inverse bijection, a meet-reversing (wedge) negation; applying
    invert twice returns the original."""
    flipped = "wedge" if n.kind == "vee" else "vee"
    out = Negation.__new__(Negation)
    out.lattice = n.lattice
    out.kind = flipped
    out.map = dict(n.inverse_map)
    out.inverse_map = dict(n.map)
    return out


def is_involutive(n: Negation) -> bool:
    """n composed with itself is the identity."""
    return all(n.map[n.map[x]] == x for x in n.lattice.elements)


def negation_from_irreducible_map(l: Lattice, jmap) -> Negation:
    """Extend a join-irreducible to meet-irreducible correspondence to the
    whole lattice via n(x) = meet of the images of eta(x).

    Requires a distributive lattice (decompositions are unique there) and an
    injective jmap into the meet-irreducibles; raises NoConsistentExtension
    when the induced map is not a vee-negation.
    """
    if not is_distributive(l):
        raise NotDistributive("irreducible extension requires a distributive lattice")
    jmap = dict(jmap)
    missing = [j for j in l.joinirr if j not in jmap]
    if missing:
        raise NotABijection(f"no image for join-irreducible {missing[0]!r}")
    meetirr = set(l.meetirr)
    images = []
    for j in l.joinirr:
        img = jmap[j]
        if img not in meetirr:
            raise NotABijection(f"image {img!r} of {j!r} is not meet-irreducible")
        images.append(img)
    if len(set(images)) != len(images):
        raise NotABijection("two join-irreducibles share one image")

    mapping = {}
    for x in l.elements:
        parts = [jmap[j] for j in sorted(eta(l, x), key=l.poset.index_of)]
        mapping[x] = meet(l, parts) if parts else l.top
    res = verify_vee_negation(l, mapping)
    if not res:
        raise NoConsistentExtension(res.detail)
    return Negation(l, mapping, "vee", _verified=True)
