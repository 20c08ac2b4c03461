"""Factorisations of an open Petri net into transitionless and single-transition pieces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebra import body_net_pmn, compose_all, identity, tensor_all, with_identity_legs
from .core import OpenPetriNet, PetriNet, SetMap
from .iso import is_isomorphic


@dataclass(frozen=True)
class ExtractFactors:
    """``q ; r ; q_prime`` with ``q``, ``q_prime`` transitionless and ``r`` on identity legs."""

    q: OpenPetriNet
    r: OpenPetriNet
    q_prime: OpenPetriNet

    def recompose(self) -> OpenPetriNet:
        return compose_all([self.q, self.r, self.q_prime])

    def factors(self) -> list[OpenPetriNet]:
        return [self.q, self.r, self.q_prime]


@dataclass(frozen=True)
class AtomicFactors:
    """``q ; g_1 ; ... ; g_N ; q_prime``, one transition per ``g_i``."""

    q: OpenPetriNet
    gs: tuple[OpenPetriNet, ...]
    q_prime: OpenPetriNet

    def recompose(self, order=None) -> OpenPetriNet:
        gs = self.gs if order is None else [self.gs[k] for k in order]
        return compose_all([self.q, *gs, self.q_prime])

    def factors(self) -> list[OpenPetriNet]:
        return [self.q, *self.gs, self.q_prime]


@dataclass(frozen=True)
class PmnFactors:
    """``q ; (g0 + g_1 + ... + g_N) ; q_prime`` with each ``g_i`` a ``P_{m,n}`` body net.

    ``h`` is the gluing map from the arc species back to the original species.
    """

    q: OpenPetriNet
    g0: OpenPetriNet
    gs: tuple[OpenPetriNet, ...]
    q_prime: OpenPetriNet
    h: SetMap

    def middle(self) -> OpenPetriNet:
        return tensor_all([self.g0, *self.gs])

    def recompose(self) -> OpenPetriNet:
        return compose_all([self.q, self.middle(), self.q_prime])

    def factors(self) -> list[OpenPetriNet]:
        return [self.q, self.g0, *self.gs, self.q_prime]


Factors = Union[ExtractFactors, AtomicFactors, PmnFactors]


def extract(p: OpenPetriNet) -> ExtractFactors:
    n = p.n_species
    ident = SetMap.identity(n)
    return ExtractFactors(
        q=OpenPetriNet(p.dom, ident, PetriNet.transitionless(n)),
        r=OpenPetriNet(ident, ident, p.net),
        q_prime=OpenPetriNet(ident, p.cod, PetriNet.transitionless(n)),
    )


def decompose_atomic(p: OpenPetriNet) -> AtomicFactors:
    """Split off each transition, in index order, as its own identity-legged factor."""
    outer = extract(p)
    net = p.net
    gs = tuple(
        with_identity_legs(PetriNet(net.n_species, [net.source[k]], [net.target[k]]))
        for k in range(net.n_transitions)
    )
    return AtomicFactors(outer.q, gs, outer.q_prime)


def decompose_pmn(p: OpenPetriNet) -> PmnFactors:
    """Give every arc its own species, then glue them back with ``h``.

    Arc species of a transition are ordered inputs first (by species index,
    one per unit of multiplicity), then outputs likewise.  Species that
    touch no transition are kept in ``g0``.
    """
    net = p.net
    n = net.n_species
    used = set()
    for k in range(net.n_transitions):
        used.update(s for s in range(n) if net.source[k][s] or net.target[k][s])
    isolated = [s for s in range(n) if s not in used]

    h = list(isolated)
    gs = []
    for k in range(net.n_transitions):
        ins = [s for s in range(n) for _ in range(net.source[k][s])]
        outs = [s for s in range(n) for _ in range(net.target[k][s])]
        h.extend(ins)
        h.extend(outs)
        gs.append(body_net_pmn(len(ins), len(outs)))

    glue = SetMap(len(h), n, h)
    return PmnFactors(
        q=OpenPetriNet(p.dom, glue, PetriNet.transitionless(n)),
        g0=identity(len(isolated)),
        gs=tuple(gs),
        q_prime=OpenPetriNet(glue, p.cod, PetriNet.transitionless(n)),
        h=glue,
    )


def verify_roundtrip(p: OpenPetriNet, factors: Factors) -> bool:
    return is_isomorphic(factors.recompose(), p) is not None

