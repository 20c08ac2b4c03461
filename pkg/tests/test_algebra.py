import pytest
from hypothesis import given

from opetri.algebra import (
    atomic_pmn,
    body_net,
    body_net_pmn,
    compose,
    epsilon,
    eta,
    generator,
    identity,
    is_monic_net,
    tensor,
    tensor_all,
)
from opetri.catalog import catalyst_pair, three_transition_mope
from opetri.core import BodyType, OpenPetriNet, PetriNet, SetMap, body_type_of
from opetri.errors import EmptyPairRejected, FootMismatch
from opetri.invariants import body_types_up_to, f_mn
from opetri.iso import is_isomorphic

from conftest import composable_pairs, open_nets

mu, eta1, delta, eps1 = (generator(w) for w in ("mu", "eta", "delta", "epsilon"))


def closed_one_species():
    return OpenPetriNet(SetMap.empty(1), SetMap.empty(1), PetriNet(1))


def test_delta_then_mu_is_identity():
    assert compose(delta, mu) == identity(1)


def test_eta_then_epsilon_is_closed_species():
    assert compose(eta(1), epsilon(1)) == closed_one_species()


def test_catalyst_composite():
    left, merge = catalyst_pair()
    assert body_type_of(left.net, 0).pairs == ((0, 1), (1, 0))
    c = compose(left, merge)
    assert c.n_species == 1
    assert c.net.source == ((1,),) and c.net.target == ((1,),)
    assert body_type_of(c.net, 0).pairs == ((1, 1),)
    assert c.dom_size == 0 and c.cod.table == (0,)


def test_pushout_block_numbering():
    # S = {0,1,2}, S' = {0,1}; o = (2, 0), i' = (1, 0)
    # glue 2~S'1, 0~S'0 -> blocks {0, S'0}, {1}, {2, S'1}
    p = OpenPetriNet(SetMap.identity(3), SetMap(2, 3, (2, 0)), PetriNet(3, [(1, 1, 1)], [(0, 0, 0)]))
    q = OpenPetriNet(SetMap(2, 2, (1, 0)), SetMap.identity(2), PetriNet(2, [(0, 0)], [(2, 3)]))
    c = compose(p, q)
    assert c.n_species == 3
    assert c.dom.table == (0, 1, 2)
    assert c.cod.table == (0, 2)
    assert c.net.source == ((1, 1, 1), (0, 0, 0))
    assert c.net.target == ((0, 0, 0), (2, 0, 3))


def test_foot_mismatch():
    with pytest.raises(FootMismatch):
        compose(identity(2), identity(3))


def test_eta_tensor():
    assert tensor(eta1, eta1) == eta(2)
    assert tensor(eta(2), eta(3)) == eta(5)
    assert tensor_all([eps1] * 4) == epsilon(4)


def test_tensor_unit():
    p = three_transition_mope()
    assert tensor(identity(0), p) == p
    assert tensor(p, identity(0)) == p


def test_tensor_of_p10_and_p01():
    t = tensor(body_net_pmn(1, 0), body_net_pmn(0, 1))
    assert t.n_transitions == 2 and t.n_species == 2
    assert f_mn(t, 1, 0) == 1 and f_mn(t, 0, 1) == 1


def test_identity():
    assert identity(0).n_species == 0
    assert identity(3).n_species == 3 and identity(3).n_transitions == 0
    assert compose(identity(2), identity(2)) == identity(2)


def test_generators():
    assert not is_monic_net(mu)
    assert is_monic_net(eta1)
    assert eta(1) == eta1
    assert epsilon(1) == eps1
    assert eta(0) == identity(0)
    assert generator("μ") == mu
    with pytest.raises(ValueError):
        generator("nu")


def test_atomic_pmn():
    p22 = atomic_pmn(2, 2)
    assert p22.source == ((1, 1, 0, 0),) and p22.target == ((0, 0, 1, 1),)
    p00 = atomic_pmn(0, 0)
    assert p00.n_species == 0 and p00.n_transitions == 1
    assert body_type_of(atomic_pmn(2, 1), 0).pairs == ((0, 1), (1, 0), (1, 0))


def test_body_net():
    assert body_net(BodyType.pmn(3, 2)) == body_net_pmn(3, 2)
    empty = body_net([])
    assert empty.n_species == 0 and empty.n_transitions == 1
    with pytest.raises(EmptyPairRejected):
        body_net([(1, 0), (0, 0)])


@pytest.mark.parametrize("bt", body_types_up_to(4)[:50])
def test_body_net_roundtrip(bt):
    assert body_type_of(body_net(bt).net, 0) == bt


def test_three_transition_net_is_mope():
    assert is_monic_net(three_transition_mope())


def test_boundary_relations():
    assert is_isomorphic(compose(eta(2), mu), eta(1))
    assert is_isomorphic(compose(delta, epsilon(2)), epsilon(1))


@given(composable_pairs(mope=True))
def test_mope_closed_under_composition(pair):
    p, q = pair
    assert is_monic_net(compose(p, q))


@given(composable_pairs())
def test_transition_count_additive(pair):
    p, q = pair
    assert compose(p, q).n_transitions == p.n_transitions + q.n_transitions
    assert tensor(p, q).n_transitions == p.n_transitions + q.n_transitions


@given(open_nets(max_species=5))
def test_unit_laws(p):
    assert is_isomorphic(compose(identity(p.dom_size), p), p)
    assert is_isomorphic(compose(p, identity(p.cod_size)), p)
