"""Open Petri nets: composition, decomposition and additive invariants."""

from .algebra import (
    atomic_pmn,
    body_net,
    body_net_pmn,
    compose,
    compose_all,
    epsilon,
    eta,
    generator,
    identity,
    is_monic_net,
    tensor,
    tensor_all,
)
from .core import (
    BodyType,
    OpenPetriNet,
    PetriNet,
    SetMap,
    body_type_of,
    input_arcs,
    output_arcs,
    validate,
)
from .decompose import decompose_atomic, decompose_pmn, extract, verify_roundtrip
from .invariants import (
    BoundarySequences,
    MopeInvariantSpec,
    OPetriInvariantSpec,
    check_additivity,
    classify_mope,
    classify_opetri,
    eval_mope,
    eval_opetri,
    f_az,
    f_bt,
    f_mn,
)
from .io import export_dot, parse_net, random_net, serialize_net
from .iso import OpenIso, canonical_key, is_isomorphic

__version__ = "0.1.0"
