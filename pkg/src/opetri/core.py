"""Finite-set maps, Petri nets and open Petri nets.

Finite sets are ordinals: a set of size ``n`` is ``{0, ..., n-1}`` and is
represented by the integer ``n`` alone.  A multiset over the species of a
net is a dense count vector of length ``n_species``.

Display names are carried along for readability but never take part in
equality, composition or isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    EmptyPairRejected,
    IndexOutOfRange,
    LegCodomainMismatch,
    MapOutOfRange,
    MultisetLengthMismatch,
)

Row = tuple[int, ...]


@dataclass(frozen=True)
class SetMap:
    """A total function ``{0..dom-1} -> {0..cod-1}`` stored as a lookup table."""

    dom: int
    cod: int
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))

    @classmethod
    def identity(cls, n: int) -> SetMap:
        return cls(n, n, tuple(range(n)))

    @classmethod
    def empty(cls, cod: int) -> SetMap:
        return cls(0, cod, ())

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __len__(self) -> int:
        return self.dom

    def is_monic(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def then(self, other: SetMap) -> SetMap:
        """Diagrammatic composite: first ``self``, then ``other``."""
        return SetMap(self.dom, other.cod, tuple(other.table[x] for x in self.table))

    def check(self, path: str = "map") -> None:
        if len(self.table) != self.dom:
            raise MultisetLengthMismatch(
                f"table has {len(self.table)} entries, domain has size {self.dom}", path
            )
        for k, v in enumerate(self.table):
            if not 0 <= v < self.cod:
                raise MapOutOfRange(f"value {v} outside 0..{self.cod - 1}", f"{path}[{k}]")


def total(counts: Iterable[int]) -> int:
    return sum(counts)


@dataclass(frozen=True)
class PetriNet:
    """A Petri net ``(S, T, s, t)``.

    ``source[k]`` and ``target[k]`` are the input and output multisets of
    transition ``k``, each a count vector of length ``n_species``.
    """

    n_species: int
    source: tuple[Row, ...] = ()
    target: tuple[Row, ...] = ()
    species_names: tuple[str, ...] | None = field(default=None, compare=False)
    transition_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(tuple(r) for r in self.source))
        object.__setattr__(self, "target", tuple(tuple(r) for r in self.target))
        if self.species_names is not None:
            object.__setattr__(self, "species_names", tuple(self.species_names))
        if self.transition_names is not None:
            object.__setattr__(self, "transition_names", tuple(self.transition_names))

    @classmethod
    def transitionless(cls, n: int) -> PetriNet:
        """The net ``0_S`` on ``n`` species."""
        return cls(n)

    @property
    def n_transitions(self) -> int:
        return len(self.source)

    def _check_index(self, tau: int) -> None:
        if not 0 <= tau < self.n_transitions:
            raise IndexOutOfRange(
                f"transition {tau} out of range for a net with {self.n_transitions} transitions"
            )

    def species_name(self, k: int) -> str:
        return self.species_names[k] if self.species_names else f"s{k}"

    def transition_name(self, k: int) -> str:
        return self.transition_names[k] if self.transition_names else f"t{k}"

    def check(self) -> None:
        if len(self.target) != len(self.source):
            raise MultisetLengthMismatch(
                f"{len(self.source)} source rows but {len(self.target)} target rows",
                "transitions",
            )
        for k, (s, t) in enumerate(zip(self.source, self.target)):
            for key, row in (("inputs", s), ("outputs", t)):
                path = f"transitions[{k}].{key}"
                if len(row) != self.n_species:
                    raise MultisetLengthMismatch(
                        f"multiset of length {len(row)} over {self.n_species} species", path
                    )
                if any(c < 0 for c in row):
                    raise MapOutOfRange("negative arc count", path)
        if self.species_names is not None and len(self.species_names) != self.n_species:
            raise MultisetLengthMismatch("one name per species required", "species")
        if self.transition_names is not None and len(self.transition_names) != self.n_transitions:
            raise MultisetLengthMismatch("one name per transition required", "transitions")


@dataclass(frozen=True)
class OpenPetriNet:
    """A Petri net decorating the cospan ``X --dom--> S <--cod-- Y``."""

    dom: SetMap
    cod: SetMap
    net: PetriNet

    @property
    def n_species(self) -> int:
        return self.net.n_species

    @property
    def n_transitions(self) -> int:
        return self.net.n_transitions

    @property
    def dom_size(self) -> int:
        return self.dom.dom

    @property
    def cod_size(self) -> int:
        return self.cod.dom

    def is_mope(self) -> bool:
        return self.dom.is_monic() and self.cod.is_monic()

    def is_transitionless(self) -> bool:
        return self.net.n_transitions == 0

    def __repr__(self) -> str:
        return (
            f"OpenPetriNet({self.dom_size} -> {self.n_species} <- {self.cod_size}, "
            f"dom={list(self.dom.table)}, cod={list(self.cod.table)}, "
            f"s={[list(r) for r in self.net.source]}, t={[list(r) for r in self.net.target]})"
        )


def validate(p: OpenPetriNet) -> None:
    """Raise on the first violated data-model invariant; return ``None`` if valid."""
    for name, leg in (("dom", p.dom), ("cod", p.cod)):
        if leg.cod != p.net.n_species:
            raise LegCodomainMismatch(
                f"leg codomain has size {leg.cod}, net has {p.net.n_species} species", name
            )
    p.dom.check("dom.map")
    p.cod.check("cod.map")
    p.net.check()


@dataclass(frozen=True, order=True)
class BodyType:
    """Multiset of ``(inputs, outputs)`` pairs, kept lexicographically sorted."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple(sorted((int(a), int(b)) for a, b in self.pairs))
        for a, b in pairs:
            if a < 0 or b < 0:
                raise MapOutOfRange(f"negative count in pair ({a}, {b})")
            if (a, b) == (0, 0):
                raise EmptyPairRejected("body types cannot contain (0, 0)")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def pmn(cls, m: int, n: int) -> BodyType:
        return cls(((1, 0),) * m + ((0, 1),) * n)

    @property
    def inputs(self) -> int:
        return sum(a for a, _ in self.pairs)

    @property
    def outputs(self) -> int:
        return sum(b for _, b in self.pairs)

    @property
    def arcs(self) -> int:
        return self.inputs + self.outputs

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __str__(self) -> str:
        return "[" + ", ".join(f"({a},{b})" for a, b in self.pairs) + "]"


def input_arcs(net: PetriNet, tau: int) -> int:
    net._check_index(tau)
    return total(net.source[tau])


def output_arcs(net: PetriNet, tau: int) -> int:
    net._check_index(tau)
    return total(net.target[tau])


def body_type_of(net: PetriNet, tau: int) -> BodyType:
    net._check_index(tau)
    return BodyType(
        (a, b) for a, b in zip(net.source[tau], net.target[tau]) if a or b
    )


def body_types(net: PetriNet) -> list[BodyType]:
    return [body_type_of(net, k) for k in range(net.n_transitions)]


def relabel(p: OpenPetriNet, species: Sequence[int], transitions: Sequence[int]) -> OpenPetriNet:
    """Rename species ``k -> species[k]`` and transitions ``k -> transitions[k]``.

    Both sequences must be permutations.  The result is isomorphic to ``p``.
    """
    ns, nt = p.n_species, p.n_transitions
    src: list[Row] = [()] * nt
    tgt: list[Row] = [()] * nt
    for k in range(nt):
        s_row = [0] * ns
        t_row = [0] * ns
        for sigma in range(ns):
            s_row[species[sigma]] = p.net.source[k][sigma]
            t_row[species[sigma]] = p.net.target[k][sigma]
        src[transitions[k]] = tuple(s_row)
        tgt[transitions[k]] = tuple(t_row)
    return OpenPetriNet(
        SetMap(p.dom_size, ns, (species[x] for x in p.dom.table)),
        SetMap(p.cod_size, ns, (species[x] for x in p.cod.table)),
        PetriNet(ns, src, tgt),
    )
