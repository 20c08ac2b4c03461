"""Composition, monoidal product and the named nets of the category."""

from __future__ import annotations

from functools import reduce
from typing import Iterable

from .core import BodyType, OpenPetriNet, PetriNet, SetMap
from .errors import FootMismatch


class UnionFind:
    """Disjoint sets over ``range(n)`` with path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x != y:
            # keep the smaller element as root
            if y < x:
                x, y = y, x
            self.parent[y] = x

    def blocks(self) -> tuple[list[int], int]:
        """Number blocks by their smallest member; return (block_of, count)."""
        label: dict[int, int] = {}
        block_of = []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in label:
                label[r] = len(label)
            block_of.append(label[r])
        return block_of, len(label)


def _push_rows(rows, offset, block_of, n_blocks):
    pushed = []
    for row in rows:
        new = [0] * n_blocks
        for sigma, c in enumerate(row):
            new[block_of[offset + sigma]] += c
        pushed.append(tuple(new))
    return pushed


def _all_species(net: PetriNet) -> tuple[str, ...]:
    return tuple(net.species_name(k) for k in range(net.n_species))


def _all_transitions(net: PetriNet) -> tuple[str, ...]:
    return tuple(net.transition_name(k) for k in range(net.n_transitions))


def _joined(a: PetriNet, b: PetriNet, attr: str, names):
    # names survive only if at least one side carries them
    if getattr(a, attr) is None and getattr(b, attr) is None:
        return None
    return names(a) + names(b)


def compose(p: OpenPetriNet, q: OpenPetriNet) -> OpenPetriNet:
    """Glue ``p`` then ``q`` along the shared foot (diagrammatic order ``p ; q``).

    The species of the result form the pushout ``S +_Y S'``: the disjoint
    union ``S + S'`` (S first) quotiented by ``o(y) ~ i'(y)``, with blocks
    numbered by their smallest member.
    """
    if p.cod_size != q.dom_size:
        raise FootMismatch(
            f"cannot compose: left codomain foot has size {p.cod_size}, "
            f"right domain foot has size {q.dom_size}"
        )
    ns = p.n_species
    uf = UnionFind(ns + q.n_species)
    for y in range(p.cod_size):
        uf.union(p.cod(y), ns + q.dom(y))
    block_of, n = uf.blocks()

    source = _push_rows(p.net.source, 0, block_of, n) + _push_rows(q.net.source, ns, block_of, n)
    target = _push_rows(p.net.target, 0, block_of, n) + _push_rows(q.net.target, ns, block_of, n)

    species_names = None
    all_species = _joined(p.net, q.net, "species_names", _all_species)
    if all_species is not None:
        first: dict[int, str] = {}
        for x, b in enumerate(block_of):
            first.setdefault(b, all_species[x])
        species_names = tuple(first[b] for b in range(n))

    return OpenPetriNet(
        SetMap(p.dom_size, n, (block_of[x] for x in p.dom.table)),
        SetMap(q.cod_size, n, (block_of[ns + x] for x in q.cod.table)),
        PetriNet(
            n,
            source,
            target,
            species_names=species_names,
            transition_names=_joined(p.net, q.net, "transition_names", _all_transitions),
        ),
    )


def tensor(p: OpenPetriNet, q: OpenPetriNet) -> OpenPetriNet:
    """Monoidal product: disjoint union of feet, species and transitions, ``p`` first."""
    ns, nq = p.n_species, q.n_species
    n = ns + nq
    source = [r + (0,) * nq for r in p.net.source] + [(0,) * ns + r for r in q.net.source]
    target = [r + (0,) * nq for r in p.net.target] + [(0,) * ns + r for r in q.net.target]
    return OpenPetriNet(
        SetMap(p.dom_size + q.dom_size, n, p.dom.table + tuple(ns + x for x in q.dom.table)),
        SetMap(p.cod_size + q.cod_size, n, p.cod.table + tuple(ns + x for x in q.cod.table)),
        PetriNet(
            n,
            source,
            target,
            species_names=_joined(p.net, q.net, "species_names", _all_species),
            transition_names=_joined(p.net, q.net, "transition_names", _all_transitions),
        ),
    )


def compose_all(nets: Iterable[OpenPetriNet]) -> OpenPetriNet:
    return reduce(compose, nets)


def tensor_all(nets: Iterable[OpenPetriNet]) -> OpenPetriNet:
    return reduce(tensor, nets, identity(0))


def identity(n: int) -> OpenPetriNet:
    return OpenPetriNet(SetMap.identity(n), SetMap.identity(n), PetriNet.transitionless(n))


def _one_species(dom: int, cod: int) -> OpenPetriNet:
    return OpenPetriNet(SetMap(dom, 1, (0,) * dom), SetMap(cod, 1, (0,) * cod), PetriNet(1))


_GENERATORS = {
    "mu": (2, 1),
    "eta": (0, 1),
    "delta": (1, 2),
    "epsilon": (1, 0),
}
_ALIASES = {"μ": "mu", "η": "eta", "δ": "delta", "ε": "epsilon"}


def generator(which: str) -> OpenPetriNet:
    """One of the four one-species transitionless generators.

    ``mu = (2 -> 1 <- 1)``, ``eta = (0 -> 1 <- 1)``, ``delta = (1 -> 1 <- 2)``
    and ``epsilon = (1 -> 1 <- 0)``.
    """
    which = _ALIASES.get(which, which)
    try:
        dom, cod = _GENERATORS[which]
    except KeyError:
        raise ValueError(f"unknown generator {which!r}; expected one of {sorted(_GENERATORS)}") from None
    return _one_species(dom, cod)


def eta(n: int) -> OpenPetriNet:
    """Boundary net ``0 -> S <- S``."""
    return OpenPetriNet(SetMap.empty(n), SetMap.identity(n), PetriNet.transitionless(n))


def epsilon(n: int) -> OpenPetriNet:
    """Boundary net ``S -> S <- 0``."""
    return OpenPetriNet(SetMap.identity(n), SetMap.empty(n), PetriNet.transitionless(n))


def atomic_pmn(m: int, n: int) -> PetriNet:
    """Single transition with ``m`` unit input species followed by ``n`` unit output species."""
    return PetriNet(m + n, [(1,) * m + (0,) * n], [(0,) * m + (1,) * n])


def with_identity_legs(net: PetriNet) -> OpenPetriNet:
    n = net.n_species
    return OpenPetriNet(SetMap.identity(n), SetMap.identity(n), net)


def body_net_pmn(m: int, n: int) -> OpenPetriNet:
    return with_identity_legs(atomic_pmn(m, n))


def body_net(bt: BodyType | Iterable[tuple[int, int]]) -> OpenPetriNet:
    """The canonical atomic net of a body type, wrapped in identity legs.

    Species are laid out by decreasing input count, then increasing output
    count, so the all-unit body type gives exactly ``body_net_pmn(m, n)``.
    """
    if not isinstance(bt, BodyType):
        bt = BodyType(tuple(bt))
    pairs = sorted(bt.pairs, key=lambda ab: (-ab[0], ab[1]))
    return with_identity_legs(
        PetriNet(len(pairs), [tuple(a for a, _ in pairs)], [tuple(b for _, b in pairs)])
    )


def is_monic_net(p: OpenPetriNet) -> bool:
    return p.is_mope()
