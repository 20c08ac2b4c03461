"""Worked example nets used throughout the docs and tests."""

from __future__ import annotations

from .core import OpenPetriNet, PetriNet, SetMap

ELECTROLYSIS_JSON = """{
  "species": ["H2O", "H2", "O2"],
  "transitions": [
    {"name": "electrolysis", "inputs": {"H2O": 2}, "outputs": {"H2": 2, "O2": 1}}
  ],
  "dom": {"size": 0, "map": []},
  "cod": {"size": 0, "map": []}
}
"""


def electrolysis() -> OpenPetriNet:
    """``2 H2O -> 2 H2 + O2`` as a closed net."""
    net = PetriNet(
        3,
        [(2, 0, 0)],
        [(0, 2, 1)],
        species_names=("H2O", "H2", "O2"),
        transition_names=("electrolysis",),
    )
    return OpenPetriNet(SetMap.empty(3), SetMap.empty(3), net)


# species A..E = 0..4; transitions alpha, beta, gamma
_ABC_SOURCE = [(1, 1, 0, 0, 0), (1, 0, 0, 0, 0), (0, 0, 0, 1, 0)]
_ABC_TARGET = [(0, 0, 1, 0, 0), (0, 0, 1, 0, 0), (0, 0, 1, 1, 0)]


def _three_transitions(dom: list[int], cod: list[int]) -> OpenPetriNet:
    net = PetriNet(
        5,
        _ABC_SOURCE,
        _ABC_TARGET,
        species_names=tuple("ABCDE"),
        transition_names=("alpha", "beta", "gamma"),
    )
    return OpenPetriNet(SetMap(len(dom), 5, dom), SetMap(len(cod), 5, cod), net)


def three_transition_mope() -> OpenPetriNet:
    """Injective-legged net with three transitions.

    alpha: A + B -> C, beta: A -> C, gamma: D -> C + D (D is a catalyst),
    E isolated; feet X = (B, A, E), Y = (B, D).
    """
    return _three_transitions([1, 0, 4], [1, 3])


def three_transition_open() -> OpenPetriNet:
    """Same decoration with a non-injective input foot X = (B, A, A, E)."""
    return _three_transitions([1, 0, 0, 4], [1, 3])


def catalyst_pair() -> tuple[OpenPetriNet, OpenPetriNet]:
    """``(0 -> {a, b} <- {a, b}, a -> b)`` and the merge generator ``2 -> 1 <- 1``.

    Composing them glues ``a`` and ``b`` into one species that the single
    transition both consumes and produces.
    """
    left = OpenPetriNet(
        SetMap.empty(2),
        SetMap.identity(2),
        PetriNet(2, [(1, 0)], [(0, 1)], species_names=("a", "b"), transition_names=("tau",)),
    )
    merge = OpenPetriNet(SetMap(2, 1, (0, 0)), SetMap(1, 1, (0,)), PetriNet(1))
    return left, merge
