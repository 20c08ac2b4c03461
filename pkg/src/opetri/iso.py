"""Isomorphism of open Petri nets with the feet held fixed pointwise.

Two open nets are isomorphic when there are bijections ``f`` on species and
``g`` on transitions such that ``f . i = i'``, ``f . o = o'`` and every
arc count is carried over unchanged.  The search is a plain backtracking
over transitions; species are assigned as the transitions that use them are
matched.  Nets in scope are small, so no canonical labelling is attempted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .core import OpenPetriNet, SetMap, body_type_of, relabel


@dataclass(frozen=True)
class OpenIso:
    """Witness of an isomorphism ``p -> q``."""

    species: SetMap
    transitions: SetMap

    def apply(self, p: OpenPetriNet) -> OpenPetriNet:
        return relabel(p, self.species.table, self.transitions.table)


def _pattern(table) -> tuple[int, ...]:
    """Relabel values by first occurrence, e.g. (4, 1, 4) -> (0, 1, 0)."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(v, len(seen)) for v in table)


def _transition_signatures(p: OpenPetriNet) -> list[tuple]:
    net = p.net
    return [
        (sum(net.source[k]), sum(net.target[k]), body_type_of(net, k).pairs)
        for k in range(net.n_transitions)
    ]


def _species_signatures(p: OpenPetriNet, tsig: list[tuple]) -> list[tuple]:
    net = p.net
    dom_hits = Counter(p.dom.table)
    cod_hits = Counter(p.cod.table)
    out = []
    for sigma in range(net.n_species):
        uses = sorted(
            (net.source[k][sigma], net.target[k][sigma], tsig[k])
            for k in range(net.n_transitions)
            if net.source[k][sigma] or net.target[k][sigma]
        )
        out.append((dom_hits[sigma], cod_hits[sigma], tuple(uses)))
    return out


def canonical_key(p: OpenPetriNet) -> bytes:
    """Isomorphism-invariant fingerprint.

    Equal keys are necessary for isomorphism but not sufficient.
    """
    tsig = _transition_signatures(p)
    key = (
        p.dom_size,
        p.cod_size,
        p.n_species,
        p.n_transitions,
        _pattern(p.dom.table + p.cod.table),
        tuple(sorted(tsig)),
        tuple(sorted(_species_signatures(p, tsig))),
    )
    return repr(key).encode()


class _Search:
    def __init__(self, p: OpenPetriNet, q: OpenPetriNet):
        self.p, self.q = p, q
        self.ptsig = _transition_signatures(p)
        self.qtsig = _transition_signatures(q)
        self.pssig = _species_signatures(p, self.ptsig)
        self.qssig = _species_signatures(q, self.qtsig)
        self.f: dict[int, int] = {}
        self.f_image: set[int] = set()
        self.g: dict[int, int] = {}
        self.g_image: set[int] = set()

    def _bind(self, sigma: int, target: int) -> bool:
        if sigma in self.f:
            return self.f[sigma] == target
        if target in self.f_image or self.pssig[sigma] != self.qssig[target]:
            return False
        self.f[sigma] = target
        self.f_image.add(target)
        return True

    def _unbind(self, sigma: int) -> None:
        self.f_image.discard(self.f.pop(sigma))

    def force_legs(self) -> bool:
        for leg, leg2 in ((self.p.dom, self.q.dom), (self.p.cod, self.q.cod)):
            for x in range(leg.dom):
                if not self._bind(leg(x), leg2(x)):
                    return False
        return True

    def _match_species(self, tau: int, tau2: int, todo: list[int]) -> Iterator[None]:
        """Extend ``f`` so the participating species of ``tau`` land on those of ``tau2``."""
        if not todo:
            yield
            return
        P, Q = self.p.net, self.q.net
        sigma, rest = todo[0], todo[1:]
        pair = (P.source[tau][sigma], P.target[tau][sigma])
        if sigma in self.f:
            s2 = self.f[sigma]
            if (Q.source[tau2][s2], Q.target[tau2][s2]) == pair:
                yield from self._match_species(tau, tau2, rest)
            return
        for s2 in range(Q.n_species):
            if (Q.source[tau2][s2], Q.target[tau2][s2]) != pair:
                continue
            if not self._bind(sigma, s2):
                continue
            yield from self._match_species(tau, tau2, rest)
            self._unbind(sigma)

    def _match_transitions(self, order: list[int]) -> Iterator[None]:
        if not order:
            yield
            return
        tau, rest = order[0], order[1:]
        P = self.p.net
        todo = [s for s in range(P.n_species) if P.source[tau][s] or P.target[tau][s]]
        # already-bound species first so mismatches are caught early
        todo.sort(key=lambda s: (s not in self.f, s))
        for tau2 in range(self.q.n_transitions):
            if tau2 in self.g_image or self.qtsig[tau2] != self.ptsig[tau]:
                continue
            self.g[tau] = tau2
            self.g_image.add(tau2)
            for _ in self._match_species(tau, tau2, todo):
                yield from self._match_transitions(rest)
            del self.g[tau]
            self.g_image.discard(tau2)

    def run(self) -> OpenIso | None:
        if not self.force_legs():
            return None
        counts = Counter(self.qtsig)
        order = sorted(
            range(self.p.n_transitions),
            key=lambda k: (counts[self.ptsig[k]], -len(self.ptsig[k][2]), k),
        )
        for _ in self._match_transitions(order):
            free = [s for s in range(self.q.n_species) if s not in self.f_image]
            unbound = [s for s in range(self.p.n_species) if s not in self.f]
            species = dict(self.f)
            species.update(zip(unbound, free))
            n, t = self.p.n_species, self.p.n_transitions
            return OpenIso(
                SetMap(n, n, (species[s] for s in range(n))),
                SetMap(t, t, (self.g[k] for k in range(t))),
            )
        return None


def is_isomorphic(p: OpenPetriNet, q: OpenPetriNet) -> OpenIso | None:
    """Return a witness ``p -> q`` if one exists, else ``None``."""
    if (p.dom_size, p.cod_size, p.n_species, p.n_transitions) != (
        q.dom_size,
        q.cod_size,
        q.n_species,
        q.n_transitions,
    ):
        return None
    if canonical_key(p) != canonical_key(q):
        return None
    return _Search(p, q).run()
