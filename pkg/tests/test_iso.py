import random

from hypothesis import given
from hypothesis import strategies as st

from opetri.algebra import body_net_pmn, compose, compose_all, eta, identity
from opetri.catalog import three_transition_mope
from opetri.core import OpenPetriNet, PetriNet, SetMap, relabel
from opetri.decompose import decompose_atomic
from opetri.io import Bounds, random_net
from opetri.iso import canonical_key, is_isomorphic

from conftest import brute_force_iso, open_nets


def test_self_iso_is_identity():
    p = three_transition_mope()
    w = is_isomorphic(p, p)
    assert w is not None
    assert w.species.table == tuple(range(5))
    assert w.transitions.table == (0, 1, 2)


def test_swapped_inputs_of_p21():
    net = PetriNet(3, [(1, 1, 0)], [(0, 0, 1)])
    p = OpenPetriNet(SetMap.empty(3), SetMap.empty(3), net)
    q = relabel(p, [1, 0, 2], [0])
    assert is_isomorphic(p, q)


def test_feet_are_fixed_pointwise():
    # same decoration with the species swapped, legs left alone
    p = body_net_pmn(1, 1)
    q = OpenPetriNet(p.dom, p.cod, PetriNet(2, [(0, 1)], [(1, 0)]))
    assert q != p
    assert is_isomorphic(p, q) is None
    assert not brute_force_iso(p, q)


def test_atomic_factor_order():
    f = decompose_atomic(three_transition_mope())
    g1, g2 = f.gs[0], f.gs[1]
    assert is_isomorphic(
        compose(f.q, compose(g1, g2)), compose(f.q, compose(g2, g1))
    )


def test_canonical_keys():
    p = three_transition_mope()
    assert canonical_key(p) == canonical_key(relabel(p, [4, 3, 2, 1, 0], [2, 1, 0]))
    assert canonical_key(body_net_pmn(1, 2)) != canonical_key(body_net_pmn(2, 1))
    assert canonical_key(identity(3)) != canonical_key(eta(3))


def _shuffled(p, rnd):
    sp = list(range(p.n_species))
    tr = list(range(p.n_transitions))
    rnd.shuffle(sp)
    rnd.shuffle(tr)
    return relabel(p, sp, tr)


@given(open_nets(max_species=5, max_transitions=3), st.randoms(use_true_random=False))
def test_witness_is_sound(p, rnd):
    q = _shuffled(p, rnd)
    w = is_isomorphic(p, q)
    assert w is not None
    assert w.apply(p) == q
    assert canonical_key(p) == canonical_key(q)


@given(
    open_nets(max_species=4, max_transitions=3, dom=1, cod=1),
    open_nets(max_species=4, max_transitions=3, dom=1, cod=1),
)
def test_agrees_with_brute_force(p, q):
    w = is_isomorphic(p, q)
    assert (w is not None) == brute_force_iso(p, q)
    if w is not None:
        assert w.apply(p) == q
        assert canonical_key(p) == canonical_key(q)


def test_agrees_with_brute_force_on_perturbations(seed):
    rnd = random.Random(seed)
    for k in range(300):
        p = random_net(rnd, Bounds(max_species=5, max_transitions=3))
        q = _shuffled(p, rnd)
        if p.n_transitions and p.n_species:
            t, s = rnd.randrange(p.n_transitions), rnd.randrange(p.n_species)
            rows = [list(r) for r in q.net.source]
            rows[t][s] = (rows[t][s] + 1) % 3
            q = OpenPetriNet(q.dom, q.cod, PetriNet(q.n_species, rows, q.net.target))
        assert (is_isomorphic(p, q) is not None) == brute_force_iso(p, q), (k, p, q)


def test_composite_orders_all_isomorphic():
    f = decompose_atomic(three_transition_mope())
    base = f.recompose()
    for order in ([0, 1, 2], [2, 1, 0], [1, 2, 0]):
        assert is_isomorphic(compose_all([f.q, *[f.gs[k] for k in order], f.q_prime]), base)
