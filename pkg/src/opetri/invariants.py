"""Additive natural-number invariants of open Petri nets and their classifiers.

Three families of invariants are provided:

* ``f_mn``   counts transitions with ``m`` input arcs and ``n`` output arcs.
  Additive for every open net.
* ``f_bt``   counts transitions of a given body type.  Additive on nets with
  injective legs; gluing through a non-injective leg can merge species of
  one transition and change its body type.
* ``f_az``   a boundary term built from two non-decreasing sequences, only
  defined on nets with injective legs.  It respects composition; it
  respects the monoidal product only when both sequences are linear.

Every additive invariant of open nets is a non-negative combination of the
``f_mn``; every functor on injective-legged nets is ``f_az`` plus a
combination of the ``f_bt``.  The ``classify_*`` functions recover those coefficients from a
black-box invariant by probing it on the canonical nets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .algebra import body_net, body_net_pmn, compose, epsilon, eta, tensor
from .core import BodyType, OpenPetriNet, body_type_of
from .errors import AzConditionViolated, HorizonExceeded, NotMonotone, NotMope

Invariant = Callable[[OpenPetriNet], int]


@dataclass(frozen=True)
class BoundarySequences:
    """Tables ``a[0..K]`` and ``z[0..K]`` for the boundary invariant.

    Both must be non-decreasing and satisfy ``k * (a[1] + z[1]) == a[k] + z[k]``
    for every ``k`` up to the horizon ``K`` (so ``a[0] == z[0] == 0``).
    """

    a: tuple[int, ...]
    z: tuple[int, ...]

    def __post_init__(self):
        a, z = tuple(self.a), tuple(self.z)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "z", z)
        if len(a) != len(z) or not a:
            raise ValueError("a and z must be non-empty tables of equal length")
        slope = a[1] + z[1] if len(a) > 1 else 0
        for k in range(len(a)):
            if a[k] + z[k] != k * slope:
                raise AzConditionViolated(
                    f"k={k}: a_k + z_k = {a[k] + z[k]} but k*(a_1 + z_1) = {k * slope}"
                )
        for name, seq in (("a", a), ("z", z)):
            for k in range(1, len(seq)):
                if seq[k] < seq[k - 1]:
                    raise NotMonotone(f"{name} decreases at k={k}: {seq[k - 1]} -> {seq[k]}")

    @property
    def horizon(self) -> int:
        return len(self.a) - 1

    @classmethod
    def zero(cls, horizon: int) -> BoundarySequences:
        return cls((0,) * (horizon + 1), (0,) * (horizon + 1))

    @classmethod
    def from_steps(cls, slope: int, a_steps: Sequence[int]) -> BoundarySequences:
        """Build from the per-step increments of ``a``; each must lie in ``0..slope``."""
        a, z = [0], [0]
        for step in a_steps:
            a.append(a[-1] + step)
            z.append(z[-1] + slope - step)
        return cls(a, z)

    def _at(self, seq: tuple[int, ...], k: int) -> int:
        if k > self.horizon:
            raise HorizonExceeded(f"index {k} beyond horizon {self.horizon}")
        return seq[k]

    def a_k(self, k: int) -> int:
        return self._at(self.a, k)

    def z_k(self, k: int) -> int:
        return self._at(self.z, k)


def _nonzero(coeffs: Mapping) -> dict:
    return {k: v for k, v in sorted(coeffs.items()) if v}


@dataclass(frozen=True)
class OPetriInvariantSpec:
    """Coefficients ``c[m, n]`` of ``sum c[m, n] * f_mn``; zero entries are dropped."""

    coeffs: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", _nonzero({(int(m), int(n)): int(c) for (m, n), c in self.coeffs.items()})
        )

    def __call__(self, p: OpenPetriNet) -> int:
        return eval_opetri(self, p)


@dataclass(frozen=True)
class MopeInvariantSpec:
    """``f_az`` for ``boundary`` plus ``sum d[bt] * f_bt``."""

    boundary: BoundarySequences
    body_coeffs: Mapping[BodyType, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self,
            "body_coeffs",
            _nonzero({_as_body_type(bt): int(c) for bt, c in self.body_coeffs.items()}),
        )

    def __call__(self, p: OpenPetriNet) -> int:
        return eval_mope(self, p)


def _as_body_type(bt) -> BodyType:
    return bt if isinstance(bt, BodyType) else BodyType(tuple(bt))


def arc_profile(p: OpenPetriNet) -> Iterator[tuple[int, int]]:
    net = p.net
    for k in range(net.n_transitions):
        yield sum(net.source[k]), sum(net.target[k])


def f_mn(p: OpenPetriNet, m: int, n: int) -> int:
    """Number of transitions with ``m`` input arcs and ``n`` output arcs."""
    return sum(1 for prof in arc_profile(p) if prof == (m, n))


def f_bt(p: OpenPetriNet, bt) -> int:
    bt = _as_body_type(bt)
    return sum(1 for k in range(p.n_transitions) if body_type_of(p.net, k) == bt)


def f_az(p: OpenPetriNet, seqs: BoundarySequences) -> int:
    if not p.is_mope():
        raise NotMope("the boundary invariant is only defined on nets with injective legs")
    s = p.n_species
    return (seqs.a_k(s) - seqs.a_k(p.dom_size)) + (seqs.z_k(s) - seqs.z_k(p.cod_size))


def eval_opetri(spec: OPetriInvariantSpec, p: OpenPetriNet) -> int:
    if not spec.coeffs:
        return 0
    return sum(spec.coeffs.get(prof, 0) for prof in arc_profile(p))


def eval_mope(spec: MopeInvariantSpec, p: OpenPetriNet) -> int:
    value = f_az(p, spec.boundary)
    if spec.body_coeffs:
        value += sum(
            spec.body_coeffs.get(body_type_of(p.net, k), 0) for k in range(p.n_transitions)
        )
    return value


def arc_pairs(arc_bound: int) -> list[tuple[int, int]]:
    """All ``(m, n)`` with ``m + n <= arc_bound``."""
    return [(m, n) for total in range(arc_bound + 1) for m in range(total + 1) for n in [total - m]]


def body_types_up_to(arc_bound: int) -> list[BodyType]:
    """Every body type whose total number of arcs is at most ``arc_bound``.

    Includes the empty body type (a transition with no arcs).
    """
    pairs = [(a, b) for a, b in arc_pairs(arc_bound) if (a, b) != (0, 0)]
    out = []

    def grow(start: int, chosen: list, budget: int):
        out.append(BodyType(tuple(chosen)))
        for idx in range(start, len(pairs)):
            a, b = pairs[idx]
            if a + b <= budget:
                chosen.append(pairs[idx])
                grow(idx, chosen, budget - a - b)
                chosen.pop()

    grow(0, [], arc_bound)
    return sorted(out, key=lambda bt: (bt.arcs, bt.pairs))


def classify_opetri(oracle: Invariant, arc_bound: int) -> OPetriInvariantSpec:
    """Read off ``c[m, n] = oracle(P_{m,n})`` for every ``m + n <= arc_bound``.

    The result agrees with ``oracle`` on any net whose transitions each carry
    at most ``arc_bound`` arcs, provided ``oracle`` is additive.
    """
    return OPetriInvariantSpec({(m, n): oracle(body_net_pmn(m, n)) for m, n in arc_pairs(arc_bound)})


def classify_mope(oracle: Invariant, arc_bound: int, horizon: int) -> MopeInvariantSpec:
    """Probe ``oracle`` on boundary nets and body nets.

    ``a[k] = oracle(eta(k))``, ``z[k] = oracle(epsilon(k))`` for ``k <= horizon``
    and ``d[bt] = oracle(body_net(bt))`` for every body type with at most
    ``arc_bound`` arcs.  Raises if the probed sequences cannot come from a
    functor.
    """
    a = [oracle(eta(k)) for k in range(horizon + 1)]
    z = [oracle(epsilon(k)) for k in range(horizon + 1)]
    boundary = BoundarySequences(a, z)
    return MopeInvariantSpec(
        boundary, {bt: oracle(body_net(bt)) for bt in body_types_up_to(arc_bound)}
    )


@dataclass(frozen=True)
class Counterexample:
    index: int
    op: str
    whole: int
    parts: tuple[int, int]
    p: OpenPetriNet
    q: OpenPetriNet

    def __str__(self) -> str:
        return (
            f"pair #{self.index} ({self.op}): inv(whole) = {self.whole} "
            f"but inv(p) + inv(q) = {self.parts[0]} + {self.parts[1]} = {sum(self.parts)}"
        )


@dataclass(frozen=True)
class AdditivityReport:
    checked: int
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.passed

    def __str__(self) -> str:
        if self.passed:
            return f"additive on all {self.checked} checks"
        return f"not additive after {self.checked} checks: {self.counterexample}"


def check_additivity(
    inv: Invariant,
    corpus: Iterable[tuple[OpenPetriNet, OpenPetriNet]],
    ops: Sequence[str] = ("compose", "tensor"),
) -> AdditivityReport:
    """Check ``inv(p ; q) = inv(p) + inv(q)`` and ``inv(p + q) = inv(p) + inv(q)``.

    Composition is only checked for pairs whose feet match.  Stops at the
    first counterexample.
    """
    checked = 0
    for index, (p, q) in enumerate(corpus):
        parts = None
        for op in ops:
            if op == "compose":
                if p.cod_size != q.dom_size:
                    continue
                whole = compose(p, q)
            elif op == "tensor":
                whole = tensor(p, q)
            else:
                raise ValueError(f"unknown operation {op!r}")
            if parts is None:
                parts = (inv(p), inv(q))
            value = inv(whole)
            checked += 1
            if value != sum(parts):
                return AdditivityReport(checked, Counterexample(index, op, value, parts, p, q))
    return AdditivityReport(checked)


def all_f_mn(arc_bound: int) -> dict[tuple[int, int], Invariant]:
    return {(m, n): (lambda p, m=m, n=n: f_mn(p, m, n)) for m, n in arc_pairs(arc_bound)}


def sum_over(factors: Iterable[OpenPetriNet], inv: Invariant) -> int:
    return sum(inv(f) for f in factors)

