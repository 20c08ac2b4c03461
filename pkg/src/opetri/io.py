"""JSON (de)serialisation, random nets and Graphviz export.

Net documents look like::

    {"species": ["H2O", "H2", "O2"],
     "transitions": [{"name": "e", "inputs": {"H2O": 2}, "outputs": {"H2": 2, "O2": 1}}],
     "dom": {"size": 0, "map": []},
     "cod": {"size": 0, "map": []}}

``map`` entries are species indices.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .core import BodyType, OpenPetriNet, PetriNet, SetMap, validate
from .errors import InfeasibleBounds, SchemaError
from .invariants import BoundarySequences, MopeInvariantSpec, OPetriInvariantSpec

DEFAULT_SEED = 20240611


def default_seed() -> int:
    """Property-test seed; ``OPETRI_SEED`` overrides the built-in default."""
    return int(os.environ.get("OPETRI_SEED", DEFAULT_SEED))


def _no_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise SchemaError(f"duplicate key {key!r}")
        out[key] = value
    return out


def loads(text: str | bytes) -> Any:
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def _expect(cond: bool, message: str, path: str) -> None:
    if not cond:
        raise SchemaError(message, path)


def _is_nat(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and v >= 0


def _leg(doc, path: str, n_species: int) -> SetMap:
    _expect(isinstance(doc, dict), "expected an object", path)
    _expect(set(doc) == {"size", "map"}, "expected exactly the keys 'size' and 'map'", path)
    _expect(_is_nat(doc["size"]), "size must be a natural number", f"{path}.size")
    _expect(isinstance(doc["map"], list), "map must be a list", f"{path}.map")
    for k, v in enumerate(doc["map"]):
        _expect(isinstance(v, int) and not isinstance(v, bool), "expected an integer", f"{path}.map[{k}]")
    return SetMap(doc["size"], n_species, doc["map"])


def _multiset(doc, path: str, index: dict[str, int]) -> tuple[int, ...]:
    _expect(isinstance(doc, dict), "expected an object keyed by species name", path)
    row = [0] * len(index)
    for name, count in doc.items():
        _expect(name in index, f"unknown species {name!r}", f"{path}.{name}")
        _expect(_is_nat(count), "arc count must be a natural number", f"{path}.{name}")
        row[index[name]] = count
    return tuple(row)


def net_from_dict(doc: Any) -> OpenPetriNet:
    _expect(isinstance(doc, dict), "expected an object", "$")
    missing = {"species", "transitions", "dom", "cod"} - set(doc)
    _expect(not missing, f"missing keys {sorted(missing)}", "$")
    species = doc["species"]
    _expect(isinstance(species, list), "expected a list of names", "species")
    for k, name in enumerate(species):
        _expect(isinstance(name, str), "species names must be strings", f"species[{k}]")
    _expect(len(set(species)) == len(species), "species names must be unique", "species")
    index = {name: k for k, name in enumerate(species)}

    transitions = doc["transitions"]
    _expect(isinstance(transitions, list), "expected a list", "transitions")
    names, source, target = [], [], []
    for k, tr in enumerate(transitions):
        path = f"transitions[{k}]"
        _expect(isinstance(tr, dict), "expected an object", path)
        name = tr.get("name", f"t{k}")
        _expect(isinstance(name, str), "name must be a string", f"{path}.name")
        names.append(name)
        source.append(_multiset(tr.get("inputs", {}), f"{path}.inputs", index))
        target.append(_multiset(tr.get("outputs", {}), f"{path}.outputs", index))

    n = len(species)
    p = OpenPetriNet(
        _leg(doc["dom"], "dom", n),
        _leg(doc["cod"], "cod", n),
        PetriNet(n, source, target, species_names=species, transition_names=names),
    )
    validate(p)
    return p


def parse_net(text: str | bytes) -> OpenPetriNet:
    """Parse and validate a net document."""
    return net_from_dict(loads(text))


def load_net(path: str | os.PathLike) -> OpenPetriNet:
    return parse_net(Path(path).read_text())


def _unique(names: list[str]) -> list[str]:
    seen: set[str] = set()
    out = []
    for name in names:
        candidate, k = name, 1
        while candidate in seen:
            candidate = f"{name}~{k}"
            k += 1
        seen.add(candidate)
        out.append(candidate)
    return out


def net_to_dict(p: OpenPetriNet) -> dict:
    net = p.net
    species = _unique([net.species_name(k) for k in range(net.n_species)])
    transitions = []
    for k in range(net.n_transitions):
        transitions.append(
            {
                "name": net.transition_name(k),
                "inputs": {species[s]: c for s, c in enumerate(net.source[k]) if c},
                "outputs": {species[s]: c for s, c in enumerate(net.target[k]) if c},
            }
        )
    return {
        "species": species,
        "transitions": transitions,
        "dom": {"size": p.dom_size, "map": list(p.dom.table)},
        "cod": {"size": p.cod_size, "map": list(p.cod.table)},
    }


def serialize_net(p: OpenPetriNet) -> str:
    return json.dumps(net_to_dict(p), indent=2, ensure_ascii=False)


def save_net(p: OpenPetriNet, path: str | os.PathLike) -> None:
    Path(path).write_text(serialize_net(p) + "\n")


# -- invariant specification files -------------------------------------------------


def body_type_from_json(doc: Any, path: str = "$") -> BodyType:
    if isinstance(doc, dict):
        _expect("pairs" in doc, "expected key 'pairs'", path)
        doc, path = doc["pairs"], f"{path}.pairs"
    _expect(isinstance(doc, list), "expected a list of [inputs, outputs] pairs", path)
    for k, pair in enumerate(doc):
        ok = isinstance(pair, list) and len(pair) == 2 and all(_is_nat(v) for v in pair)
        _expect(ok, "expected a pair of natural numbers", f"{path}[{k}]")
    return BodyType(tuple(tuple(pair) for pair in doc))


def boundary_from_json(doc: Any, path: str = "$") -> BoundarySequences:
    _expect(isinstance(doc, dict) and {"a", "z"} <= set(doc), "expected keys 'a' and 'z'", path)
    for key in ("a", "z"):
        seq = doc[key]
        ok = isinstance(seq, list) and all(_is_nat(v) for v in seq)
        _expect(ok, "expected a list of natural numbers", f"{path}.{key}")
    return BoundarySequences(doc["a"], doc["z"])


def spec_to_dict(spec: OPetriInvariantSpec | MopeInvariantSpec) -> dict:
    if isinstance(spec, OPetriInvariantSpec):
        return {
            "kind": "opetri",
            "coeffs": [{"m": m, "n": n, "c": c} for (m, n), c in spec.coeffs.items()],
        }
    return {
        "kind": "mope",
        "boundary": {"a": list(spec.boundary.a), "z": list(spec.boundary.z)},
        "body_coeffs": [
            {"body_type": [list(pair) for pair in bt.pairs], "c": c}
            for bt, c in spec.body_coeffs.items()
        ],
    }


def spec_from_dict(doc: Any) -> OPetriInvariantSpec | MopeInvariantSpec:
    _expect(isinstance(doc, dict) and "kind" in doc, "expected an object with 'kind'", "$")
    if doc["kind"] == "opetri":
        coeffs = {}
        for k, entry in enumerate(doc.get("coeffs", [])):
            path = f"coeffs[{k}]"
            ok = isinstance(entry, dict) and all(_is_nat(entry.get(key)) for key in "mnc")
            _expect(ok, "expected {m, n, c} naturals", path)
            coeffs[entry["m"], entry["n"]] = entry["c"]
        return OPetriInvariantSpec(coeffs)
    if doc["kind"] == "mope":
        boundary = boundary_from_json(doc.get("boundary"), "boundary")
        body = {}
        for k, entry in enumerate(doc.get("body_coeffs", [])):
            path = f"body_coeffs[{k}]"
            _expect(isinstance(entry, dict) and _is_nat(entry.get("c")), "expected {body_type, c}", path)
            body[body_type_from_json(entry.get("body_type"), f"{path}.body_type")] = entry["c"]
        return MopeInvariantSpec(boundary, body)
    raise SchemaError(f"unknown kind {doc['kind']!r}", "kind")


# -- random nets -------------------------------------------------------------------


@dataclass(frozen=True)
class Bounds:
    max_species: int = 4
    max_transitions: int = 3
    max_arc: int = 2
    mope_only: bool = False
    max_foot: int | None = None


def random_net(
    seed,
    bounds: Bounds = Bounds(),
    dom_size: int | None = None,
    cod_size: int | None = None,
) -> OpenPetriNet:
    """Draw a small open net; the same seed and bounds always give the same net.

    ``dom_size`` / ``cod_size`` pin the foot sizes, which is how composable
    pairs and endomorphisms are generated.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    pinned = max(dom_size or 0, cod_size or 0)
    if bounds.mope_only:
        lo = pinned
    else:
        lo = 1 if pinned else 0
    if lo > bounds.max_species:
        raise InfeasibleBounds(
            f"a foot of size {pinned} needs at least {lo} species, bound is {bounds.max_species}"
        )
    n = rng.randint(lo, bounds.max_species)
    max_foot = bounds.max_species if bounds.max_foot is None else bounds.max_foot

    def leg(size: int | None) -> SetMap:
        if size is None:
            cap = n if bounds.mope_only else (min(max_foot, n + 1) if n else 0)
            size = rng.randint(0, cap)
        if bounds.mope_only:
            return SetMap(size, n, rng.sample(range(n), size))
        return SetMap(size, n, [rng.randrange(n) for _ in range(size)])

    dom, cod = leg(dom_size), leg(cod_size)

    def row():
        return tuple(rng.randint(1, bounds.max_arc) if rng.random() < 0.5 else 0 for _ in range(n))

    n_t = rng.randint(0, bounds.max_transitions)
    source = [row() for _ in range(n_t)]
    target = [row() for _ in range(n_t)]
    return OpenPetriNet(dom, cod, PetriNet(n, source, target))


def random_composable_pair(seed, bounds: Bounds = Bounds()) -> tuple[OpenPetriNet, OpenPetriNet]:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    p = random_net(rng, bounds)
    return p, random_net(rng, bounds, dom_size=p.cod_size)


def random_composable_triple(seed, bounds: Bounds = Bounds()):
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    p, q = random_composable_pair(rng, bounds)
    return p, q, random_net(rng, bounds, dom_size=q.cod_size)


# -- graphviz ----------------------------------------------------------------------


def _quote(text: str) -> str:
    return json.dumps(text, ensure_ascii=False)


def export_dot(p: OpenPetriNet, name: str = "open_petri_net") -> str:
    """Render as Graphviz DOT: species as ellipses, transitions as boxes, feet as clusters."""
    net = p.net
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    for cluster, prefix, size in (("dom", "x", p.dom_size), ("cod", "y", p.cod_size)):
        lines.append(f"  subgraph cluster_{cluster} {{")
        lines.append(f"    label={_quote(cluster)}; style=rounded; color=gray;")
        for k in range(size):
            lines.append(f"    {prefix}{k} [shape=point, xlabel={_quote(str(k))}];")
        lines.append("  }")
    for s in range(net.n_species):
        lines.append(f"  s{s} [shape=ellipse, label={_quote(net.species_name(s))}];")
    for t in range(net.n_transitions):
        lines.append(
            f"  t{t} [shape=box, style=filled, fillcolor=palegreen, "
            f"label={_quote(net.transition_name(t))}];"
        )
    for t in range(net.n_transitions):
        for s, c in enumerate(net.source[t]):
            if c:
                lines.append(f"  s{s} -> t{t} [label={_quote(str(c))}];")
        for s, c in enumerate(net.target[t]):
            if c:
                lines.append(f"  t{t} -> s{s} [label={_quote(str(c))}];")
    for x, s in enumerate(p.dom.table):
        lines.append(f"  x{x} -> s{s} [style=dashed, arrowhead=none];")
    for y, s in enumerate(p.cod.table):
        lines.append(f"  y{y} -> s{s} [style=dashed, arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
