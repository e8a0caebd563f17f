"""File formats, the workspace cache, and DOT export.

One canonical JSON document per artifact kind, each carrying a format
version field "v": 1.

lattice/poset   {"v": 1, "elements": [...], "covers": [["x", "y"], ...]}
                where ["x", "y"] means y covers x
function/mass   {"v": 1, "values": {"element": number, ...}}
weights         same shape as a function; omitted elements mean weight 1
negation        {"v": 1, "map": {"x": "nx", ...}}
distribution    {"v": 1, "pi": {...}} or {"v": 1, "nu": {...}}

Numbers are emitted with Python's shortest round-trip representation, so
written files are byte-stable across platforms.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .duality import Negation, negation_from_map
from .errors import FormatError
from .evidence import MassAllocation, SupportWeights
from .lattice import (
    DEFAULT_MAX_CHAINS,
    DEFAULT_MAX_DOWNSETS,
    DEFAULT_MAX_ELEMENTS,
    Lattice,
    Poset,
    lattice_from_poset,
)
from .transforms import SetFunction

FORMAT_VERSION = 1


@dataclass
class Limits:
    """Tolerances and enumeration caps used by the command line front end."""

    max_elements: int = DEFAULT_MAX_ELEMENTS
    max_downsets: int = DEFAULT_MAX_DOWNSETS
    max_chains: int = DEFAULT_MAX_CHAINS
    max_families: int = 10**6
    tolerance: float = 1e-9

    @classmethod
    def from_env(cls, environ=None) -> "Limits":
        env = os.environ if environ is None else environ
        limits = cls()
        cap = env.get("LATBEL_MAX_ELEMENTS")
        if cap is not None:
            try:
                limits.max_elements = int(cap)
            except ValueError:
                raise FormatError(f"LATBEL_MAX_ELEMENTS must be an integer, got {cap!r}")
        return limits


def _load_document(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: expected a JSON object at top level")
    v = doc.get("v", FORMAT_VERSION)
    if v != FORMAT_VERSION:
        raise FormatError(f"{path}: unsupported format version {v!r}")
    return doc


def _field(doc, path, key, kind):
    if key not in doc:
        raise FormatError(f"{path}: missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise FormatError(f"{path}: field {key!r} has the wrong type")
    return value


def load_poset(path, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Poset:
    doc = _load_document(path)
    elements = _field(doc, path, "elements", list)
    covers = _field(doc, path, "covers", list)
    pairs = []
    for entry in covers:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise FormatError(f"{path}: each cover must be a two-element list")
        pairs.append((entry[0], entry[1]))
    return Poset(elements, pairs, max_elements=max_elements)


def load_lattice(path, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Lattice:
    return lattice_from_poset(load_poset(path, max_elements=max_elements))


def load_values(path) -> dict:
    doc = _load_document(path)
    values = _field(doc, path, "values", dict)
    out = {}
    for name, v in values.items():
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise FormatError(f"{path}: value of {name!r} is not a number")
        out[name] = float(v)
    return out


def load_function(path, lattice: Lattice) -> SetFunction:
    return SetFunction(lattice, load_values(path))


def load_mass(path, lattice: Lattice, *, check: bool = True, tol: float = 1e-9) -> MassAllocation:
    return MassAllocation(lattice, load_values(path), check=check, tol=tol)


def load_weights(path, lattice: Lattice) -> SupportWeights:
    return SupportWeights(lattice, load_values(path))


def load_negation(path, lattice: Lattice) -> Negation:
    doc = _load_document(path)
    mapping = _field(doc, path, "map", dict)
    return negation_from_map(lattice, mapping)


def load_distribution(path, key: str) -> dict:
    doc = _load_document(path)
    values = _field(doc, path, key, dict)
    return {name: float(v) for name, v in values.items()}


def poset_to_dict(p: Poset) -> dict:
    return {"v": FORMAT_VERSION, "elements": list(p.elements),
            "covers": [list(c) for c in p.covers]}


def function_to_dict(f) -> dict:
    return {"v": FORMAT_VERSION, "values": {x: v for x, v in f.items()}}


def weights_to_dict(w: SupportWeights) -> dict:
    return {"v": FORMAT_VERSION, "values": {y: v for y, v in w.items()}}


def negation_to_dict(n: Negation) -> dict:
    return {"v": FORMAT_VERSION, "map": dict(n.map)}


def dumps(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def save(path, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


def dot_export(l: Lattice) -> str:
    """Hasse diagram as DOT, drawn bottom-up with one rank per height and
    join-irreducible elements drawn filled."""
    joinirr = set(l.joinirr)
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=ellipse];"]
    for x in l.elements:
        if x in joinirr:
            lines.append(f'  "{x}" [style=filled, fillcolor=black, fontcolor=white];')
        else:
            lines.append(f'  "{x}";')
    for a, b in l.covers:
        lines.append(f'  "{a}" -> "{b}";')
    by_height: dict[int, list[str]] = {}
    for x in l.elements:
        by_height.setdefault(l.heights[x], []).append(x)
    for h in sorted(by_height):
        row = "; ".join(f'"{x}"' for x in by_height[h])
        lines.append(f"  {{ rank=same; {row}; }}")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass
class Workspace:
    """Loaded artifacts keyed by file path, plus the active limits.

    Functions, negations and distributions are only handed out against a
    lattice that was itself loaded and validated here.
    """

    limits: Limits = field(default_factory=Limits)
    lattices: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)
    negations: dict = field(default_factory=dict)
    distributions: dict = field(default_factory=dict)

    def lattice(self, path) -> Lattice:
        key = os.path.abspath(path)
        if key not in self.lattices:
            self.lattices[key] = load_lattice(path, max_elements=self.limits.max_elements)
        return self.lattices[key]

    def function(self, path, lattice: Lattice) -> SetFunction:
        key = (os.path.abspath(path), id(lattice))
        if key not in self.functions:
            self.functions[key] = load_function(path, lattice)
        return self.functions[key]

    def negation(self, path, lattice: Lattice) -> Negation:
        key = (os.path.abspath(path), id(lattice))
        if key not in self.negations:
            self.negations[key] = load_negation(path, lattice)
        return self.negations[key]

    def distribution(self, path, key_name: str) -> dict:
        key = (os.path.abspath(path), key_name)
        if key not in self.distributions:
            self.distributions[key] = load_distribution(path, key_name)
        return self.distributions[key]
