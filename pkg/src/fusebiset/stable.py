"""F-stable S-sets: fixed points, stability and the basis of the stable monoid."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InternalCheckFailed, NegativeCoefficient, NonIntegerCoefficient, NotStable
from .fusion import FusionSystem
from .groups import Subgroup, canonical_conjugate


@lru_cache(maxsize=None)
def orbit_fixed_points(S: Subgroup, Q: Subgroup, R: Subgroup) -> int:
    """``|(S/R)^Q| = |{s in S : s^-1 Q s <= R}| / |R|``."""
    G = S.group
    r = R.set
    gens = Q.generators
    count = 0
    for s in S.elements:
        si = G.inv(s)
        if all(G.conj(si, x) in r for x in gens):
            count += 1
    return count // R.order


class SSet:
    """A finite ``S``-set as multiplicities of transitive orbits ``[Q] = S/Q``.

    Keys are canonical ``S``-class representatives (least element tuple).
    """

    def __init__(self, S: Subgroup, coeffs=None):
        self.S = S
        self._coeffs: dict[Subgroup, int] = {}
        for Q, c in dict(coeffs or {}).items():
            if int(c) != c or c < 0:
                raise ValueError("S-set multiplicities must be nonnegative integers")
            if c:
                R = canonical_conjugate(S, Q)
                self._coeffs[R] = self._coeffs.get(R, 0) + int(c)

    @property
    def coeffs(self) -> dict:
        return dict(sorted(self._coeffs.items(), key=lambda kv: kv[0].sort_key))

    def __getitem__(self, Q: Subgroup) -> int:
        return self._coeffs.get(canonical_conjugate(self.S, Q), 0)

    def __eq__(self, other):
        return isinstance(other, SSet) and self.S == other.S and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(sorted((Q.elements, c) for Q, c in self._coeffs.items())))

    def __add__(self, other: "SSet") -> "SSet":
        out = dict(self._coeffs)
        for Q, c in other._coeffs.items():
            out[Q] = out.get(Q, 0) + c
        return SSet(self.S, out)

    def __mul__(self, k: int) -> "SSet":
        return SSet(self.S, {Q: k * c for Q, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __le__(self, other: "SSet") -> bool:
        return all(other._coeffs.get(Q, 0) >= c for Q, c in self._coeffs.items())

    def __repr__(self):
        parts = [f"{c}[{','.join(Q.labels())}]" for Q, c in self.coeffs.items()]
        return "SSet(" + " + ".join(parts) + ")" if parts else "SSet(0)"

    @property
    def size(self) -> int:
        return sum(c * (self.S.order // Q.order) for Q, c in self._coeffs.items())

    def fixed_points(self, P: Subgroup) -> int:
        return sum(c * orbit_fixed_points(self.S, P, Q) for Q, c in self._coeffs.items())

    @classmethod
    def orbit(cls, S: Subgroup, Q: Subgroup, mult: int = 1) -> "SSet":
        return cls(S, {Q: mult})


def _fixed(S: Subgroup, coeffs: dict, P: Subgroup) -> int:
    return sum(c * orbit_fixed_points(S, P, Q) for Q, c in coeffs.items())


@dataclass
class StabilityVerdict:
    stable: bool
    subgroup: Subgroup | None = None
    conjugate: Subgroup | None = None
    counts: tuple | None = None

    def __bool__(self):
        return self.stable


def is_f_stable(F: FusionSystem, X: SSet) -> StabilityVerdict:
    """``|X^P| = |X^{phi P}|`` for every ``P`` and ``phi`` in ``F(P, S)``.

    Since ``phi P`` runs over the F-class of ``P``, one comparison per class
    member suffices.
    """
    for c in F.classes():
        P = c.members[0]
        base = X.fixed_points(P)
        for Q in c.members[1:]:
            n = X.fixed_points(Q)
            if n != base:
                return StabilityVerdict(False, P, Q, (base, n))
    return StabilityVerdict(True)


@dataclass(frozen=True)
class Deficiency:
    """One step of the stabilization: ``(|X^R| - |X^Q|) / weyl`` copies of ``[Q]``."""

    rep: Subgroup
    subgroup: Subgroup
    deficiency: int
    weyl: int

    @property
    def coefficient(self) -> Fraction:
        return Fraction(self.deficiency, self.weyl)


def _ratio(num: int, den: int, witness, what: str) -> int:
    if num % den:
        raise NonIntegerCoefficient(f"{what} {num}/{den} is not an integer", witness, num, den)
    if num < 0:
        raise NegativeCoefficient(f"{what} {num}/{den} is negative", witness, num, den)
    return num // den


def basis_element(F: FusionSystem, P: Subgroup, trace: list | None = None) -> SSet:
    """The minimal F-stable ``S``-set containing ``[P]`` exactly once.

    ``P`` should be fully F-normalized; otherwise the class representative is
    used instead (with a warning). Each nonzero step is appended to ``trace``.
    A non-integral or negative step raises a ``StabilizationError`` naming the
    subgroup where it happened; this only occurs for non-saturated ``F``.
    """
    S = F.S
    if not F.is_fully_normalized(P):
        R = F.class_rep(P)
        warnings.warn(f"P is not fully normalized; using the class representative {R.labels()}", stacklevel=2)
        P = R
    nP = F.N(P).order
    coeffs: dict[Subgroup, int] = {}
    for Q in F.classes().class_of(P).s_reps:
        coeffs[Q] = _ratio(nP, F.N(Q).order, Q, "starting multiplicity")
    for level in sorted({c.order for c in F.classes() if c.order < P.order}, reverse=True):
        added = {}
        for c in F.classes().at_order(level):
            R = c.representative
            xr = _fixed(S, coeffs, R)
            for Q in c.s_reps:
                if Q == F.s_rep(R):
                    continue
                d = xr - _fixed(S, coeffs, Q)
                w = F.N(Q).order // Q.order
                k = _ratio(d, w, Q, "stabilization coefficient")
                if trace is not None:
                    trace.append(Deficiency(R, Q, d, w))
                if k:
                    added[Q] = k
        coeffs.update(added)
    return SSet(S, coeffs)


def basis(F: FusionSystem) -> dict:
    """``{class representative: X_P}`` for every F-conjugacy class."""
    return {c.representative: basis_element(F, c.representative) for c in F.classes()}


def combine(F: FusionSystem, weights: dict) -> SSet:
    """``sum d_P X_P`` over class representatives."""
    out = SSet(F.S)
    for P, d in weights.items():
        if d:
            out = out + d * basis_element(F, F.class_rep(P))
    return out


def decompose(F: FusionSystem, X: SSet) -> dict:
    """Coefficients ``d_P >= 0`` (keyed by class representative) with ``X = sum d_P X_P``."""
    v = is_f_stable(F, X)
    if not v:
        raise NotStable(f"S-set is not F-stable at {v.subgroup.labels()} vs {v.conjugate.labels()}")
    rest = dict(X._coeffs)
    out = {}
    for c in F.classes():
        R = c.representative
        d = rest.get(F.s_rep(R), 0)
        if not d:
            continue
        out[R] = d
        for Q, k in basis_element(F, R)._coeffs.items():
            rest[Q] = rest.get(Q, 0) - d * k
            if rest[Q] < 0:
                raise InternalCheckFailed("negative remainder while decomposing a stable S-set")
    if any(rest.values()):
        raise InternalCheckFailed("nonzero remainder after decomposing a stable S-set")
    return out
