import itertools

import pytest
from hypothesis import given

from opetri.algebra import body_net_pmn, eta, identity, is_monic_net
from opetri.catalog import electrolysis, three_transition_mope, three_transition_open
from opetri.core import input_arcs, output_arcs
from opetri.decompose import decompose_atomic, decompose_pmn, extract, verify_roundtrip
from opetri.iso import is_isomorphic

from conftest import open_nets

DECOMPOSERS = [extract, decompose_atomic, decompose_pmn]


@pytest.mark.parametrize("n", [0, 1, 3])
def test_extract_identity(n):
    f = extract(identity(n))
    assert f.q == f.r == f.q_prime == identity(n)


def test_extract_eta():
    f = extract(eta(2))
    assert f.q == eta(2)
    assert f.r == identity(2)
    assert f.q_prime == identity(2)


def test_extract_three_transition_mope():
    p = three_transition_mope()
    f = extract(p)
    assert f.q.is_transitionless() and f.q_prime.is_transitionless()
    assert f.q.dom.table == (1, 0, 4) and f.q.cod.table == tuple(range(5))
    assert f.q_prime.dom.table == tuple(range(5)) and f.q_prime.cod.table == (1, 3)
    assert f.r.net == p.net
    assert verify_roundtrip(p, f)


def test_atomic_three_transition_mope():
    p = three_transition_mope()
    f = decompose_atomic(p)
    assert len(f.gs) == 3
    assert all(g.n_transitions == 1 and g.n_species == 5 for g in f.gs)
    assert [g.net.source[0] for g in f.gs] == list(p.net.source)
    assert all(is_monic_net(x) for x in f.factors())
    assert verify_roundtrip(p, f)


def test_atomic_transitionless():
    p = eta(3)
    f = decompose_atomic(p)
    assert f.gs == ()
    assert verify_roundtrip(p, f)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (2, 1), (3, 2)])
def test_pmn_of_body_net(m, n):
    p = body_net_pmn(m, n)
    f = decompose_pmn(p)
    assert f.h.table == tuple(range(m + n))
    assert f.gs == (p,)
    assert f.g0 == identity(0)
    assert verify_roundtrip(p, f)


def test_pmn_three_transition_open():
    p = three_transition_open()
    f = decompose_pmn(p)
    assert [(g.n_species, input_arcs(g.net, 0), output_arcs(g.net, 0)) for g in f.gs] == [
        (3, 2, 1),
        (2, 1, 1),
        (3, 1, 2),
    ]
    assert f.g0 == identity(1)
    assert f.h.table == (4, 0, 1, 2, 0, 2, 3, 2, 3)
    assert not is_monic_net(f.q)
    assert verify_roundtrip(p, f)


def test_pmn_electrolysis():
    p = electrolysis()
    f = decompose_pmn(p)
    assert f.gs == (body_net_pmn(2, 3),)
    assert f.h.table == (0, 0, 1, 1, 2)
    assert verify_roundtrip(p, f)


@pytest.mark.parametrize("decomposer", DECOMPOSERS)
def test_identity_roundtrips(decomposer):
    assert verify_roundtrip(identity(2), decomposer(identity(2)))


@pytest.mark.parametrize("decomposer", DECOMPOSERS)
@given(p=open_nets(max_species=5, max_transitions=3, max_arc=3))
def test_roundtrip(decomposer, p):
    assert verify_roundtrip(p, decomposer(p))


@given(open_nets(max_species=5, max_transitions=3, mope=True))
def test_mope_factors_stay_mope(p):
    assert all(is_monic_net(x) for x in extract(p).factors())
    assert all(is_monic_net(x) for x in decompose_atomic(p).factors())


@given(open_nets(max_species=4, max_transitions=3))
def test_atomic_order_is_irrelevant(p):
    f = decompose_atomic(p)
    base = f.recompose()
    for order in itertools.permutations(range(len(f.gs))):
        assert is_isomorphic(f.recompose(order), base)


@given(open_nets(max_species=5, max_transitions=3, max_arc=3))
def test_pmn_factor_shapes(p):
    f = decompose_pmn(p)
    for k, g in enumerate(f.gs):
        shape = body_net_pmn(input_arcs(p.net, k), output_arcs(p.net, k))
        assert is_isomorphic(g, shape)
