import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from opetri.core import OpenPetriNet, PetriNet, SetMap
from opetri.io import default_seed

settings.register_profile(
    "opetri",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("opetri")


def brute_force_iso(p: OpenPetriNet, q: OpenPetriNet) -> bool:
    """Try every pair of bijections; independent of the backtracking search."""
    if (p.dom_size, p.cod_size, p.n_species, p.n_transitions) != (
        q.dom_size,
        q.cod_size,
        q.n_species,
        q.n_transitions,
    ):
        return False
    ns, nt = p.n_species, p.n_transitions
    for f in itertools.permutations(range(ns)):
        if any(f[p.dom.table[x]] != q.dom.table[x] for x in range(p.dom_size)):
            continue
        if any(f[p.cod.table[y]] != q.cod.table[y] for y in range(p.cod_size)):
            continue
        for g in itertools.permutations(range(nt)):
            if all(
                q.net.source[g[k]][f[s]] == p.net.source[k][s]
                and q.net.target[g[k]][f[s]] == p.net.target[k][s]
                for k in range(nt)
                for s in range(ns)
            ):
                return True
    return False


@st.composite
def open_nets(draw, max_species=4, max_transitions=3, max_arc=2, mope=False, dom=None, cod=None):
    lo = max(dom or 0, cod or 0) if mope else (1 if (dom or cod) else 0)
    n = draw(st.integers(lo, max(lo, max_species)))

    def leg(size):
        if size is None:
            size = draw(st.integers(0, n if mope else (n + 1 if n else 0)))
        if mope:
            table = draw(st.permutations(range(n)))[:size]
        else:
            table = draw(st.lists(st.integers(0, n - 1), min_size=size, max_size=size)) if n else []
        return SetMap(size, n, table)

    d, c = leg(dom), leg(cod)
    row = st.lists(st.integers(0, max_arc), min_size=n, max_size=n).map(tuple)
    rows = draw(st.lists(st.tuples(row, row), max_size=max_transitions))
    return OpenPetriNet(d, c, PetriNet(n, [r[0] for r in rows], [r[1] for r in rows]))


@st.composite
def composable_pairs(draw, mope=False, **kw):
    p = draw(open_nets(mope=mope, **kw))
    return p, draw(open_nets(mope=mope, dom=p.cod_size, **kw))


@pytest.fixture
def seed():
    return default_seed()


@pytest.fixture
def rng(seed):
    return random.Random(seed)
