"""Bifree (S,S)-bisets stored as multisets of twisted-diagonal orbit types.

A twisted diagonal is an injective map ``phi: P -> S`` read as the subgroup
``{(phi(a), a) : a in P}`` of ``S x S``; ``(y, x)`` acts on points by
``y . w . x^-1``. Everything here is parametrized by an acting subgroup ``A``
(normally ``F.S``) so that the same code handles ``(N, N)``-bisets for
``N <= S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    CapExceeded,
    InternalCheckFailed,
    NegativeCoefficient,
    NonIntegerCoefficient,
    NotSemicharacteristic,
)
from .fusion import FusionSystem, hom_s_keys
from .groups import FiniteGroup, GroupMap, Subgroup, centralizer

POINT_CAP = 10**6


def _acting(X) -> Subgroup:
    return X.S if isinstance(X, FusionSystem) else X


class OrbitType:
    """Canonical twisted diagonal of an ``(A x A)``-conjugacy class.

    The representative is the conjugate ``c_a∘phi∘c_b`` on ``b^-1 P b`` with
    lexicographically least (source elements, image tuple).
    """

    __slots__ = ("phi", "key")

    def __init__(self, phi: GroupMap):
        self.phi = phi
        self.key = phi.key

    def __eq__(self, other):
        return isinstance(other, OrbitType) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return (len(self.key[0]), self.key) < (len(other.key[0]), other.key)

    @property
    def source(self) -> Subgroup:
        return self.phi.source

    @property
    def order(self) -> int:
        return len(self.key[0])

    def size(self, A: Subgroup) -> int:
        return A.order * A.order // self.order

    def is_identity(self) -> bool:
        return self.phi.is_identity()

    def __repr__(self):
        G = self.phi.source.group
        src = ",".join(G.labels[x] for x in self.key[0])
        if self.is_identity():
            return f"[{{{src}}},id]"
        m = ",".join(f"{G.labels[x]}->{G.labels[y]}" for x, y in zip(*self.key))
        return f"[{{{src}}},{m}]"


def twisted_diagonal(phi: GroupMap) -> list[tuple[int, int]]:
    """The pairs ``(phi(a), a)`` forming the diagonal subgroup."""
    return [(phi(a), a) for a in phi.source.elements]


@lru_cache(maxsize=None)
def _canonical(A: Subgroup, key: tuple) -> tuple:
    G = A.group
    src0, imgs0 = key
    f = dict(zip(src0, imgs0))
    sources = {}
    for b in A.elements:
        bi = G.inv(b)
        sources[b] = tuple(sorted(G.conj(bi, x) for x in src0))
    src = min(sources.values())
    bs = [b for b, s in sources.items() if s == src]
    best = None
    for b in bs:
        base = [f[G.conj(b, x)] for x in src]
        for a in A.elements:
            imgs = tuple(G.conj(a, y) for y in base)
            if best is None or imgs < best:
                best = imgs
    return src, best


def canonical_orbit_type(A, phi: GroupMap) -> OrbitType:
    A = _acting(A)
    src, imgs = _canonical(A, phi.key)
    G = A.group
    return OrbitType(GroupMap(Subgroup(G, src), imgs, G))


def n_phi_psi(A, phi: GroupMap, psi: GroupMap) -> list[int]:
    """``{x in A : x P x^-1 <= Q and psi∘c_x∘phi^-1 in Hom_A(phi P, A)}``."""
    A = _acting(A)
    G = A.group
    P, Q = phi.source, psi.source
    q = Q.set
    g = psi.as_dict
    back = dict(zip(phi.images, P.elements))
    img = phi.image
    keys = hom_s_keys(A, img)
    out = []
    for x in A.elements:
        moved = [G.conj(x, a) for a in P.elements]
        if not all(m in q for m in moved):
            continue
        eta = tuple(g[G.conj(x, back[y])] for y in img.elements)
        if eta in keys:
            out.append(x)
    return out


def transporter_orders(A, phi: GroupMap, psi: GroupMap) -> tuple[int, int]:
    """``|N_{AxA}((P,phi),(Q,psi))|`` computed two ways.

    First ``|N_{phi,psi}| |C_A(phi P)|``, then ``|N_{phi^-1,psi^-1}| |C_A(P)|``.
    """
    A = _acting(A)
    left = len(n_phi_psi(A, phi, psi)) * centralizer(A, phi.image).order
    right = len(n_phi_psi(A, phi.inverse(), psi.inverse())) * centralizer(A, phi.source).order
    return left, right


@lru_cache(maxsize=None)
def _fixed_count(A: Subgroup, target_key: tuple, probe_key: tuple) -> int:
    G = A.group
    tgt = GroupMap(Subgroup(G, target_key[0]), target_key[1], G)
    prb = GroupMap(Subgroup(G, probe_key[0]), probe_key[1], G)
    n = len(n_phi_psi(A, prb, tgt))
    if n == 0:
        return 0
    return n * centralizer(A, prb.image).order // tgt.source.order


def orbit_fixed_count(A, target, probe: GroupMap) -> int:
    """``|[Q,psi]^{(P,phi)}| = |N_{phi,psi}| |C_A(phi P)| / |Q|``."""
    A = _acting(A)
    t = target.phi if isinstance(target, OrbitType) else target
    return _fixed_count(A, t.key, probe.key)


def brute_fixed_count(A, target, probe: GroupMap) -> int:
    """Fixed points of ``(P,phi)`` on ``(A x A)/(Q,psi)`` by listing cosets."""
    A = _acting(A)
    t = target.phi if isinstance(target, OrbitType) else target
    G = A.group
    elems = np.array(A.elements)
    n = len(elems)
    if n * n // t.source.order > POINT_CAP:
        raise CapExceeded(f"orbit has more than {POINT_CAP} points")
    pos = np.full(G.order, -1)
    pos[elems] = np.arange(n)
    T = pos[G.table[np.ix_(elems, elems)]]  # local multiplication table
    Y, X = np.divmod(np.arange(n * n), n)
    label = None
    for q, pq in zip(t.source.elements, t.images):
        idx = T[Y, pos[pq]] * n + T[X, pos[q]]
        label = idx if label is None else np.minimum(label, idx)
    fixed = np.ones(n * n, dtype=bool)
    for a in probe.source.generators:
        hy, hx = pos[probe(a)], pos[a]
        moved = T[hy, Y] * n + T[hx, X]
        fixed &= label[moved] == label
    return int(fixed.sum()) // t.source.order


def twisted_conjugate(F: FusionSystem, phi: GroupMap, psi: GroupMap) -> bool:
    """Whether ``(P,phi)`` and ``(Q,psi)`` are ``F x F``-conjugate.

    Scans ``eta1 in F(P,Q)`` onto ``Q`` and asks whether
    ``psi∘eta1∘phi^-1`` is an F-map on ``phi P``.
    """
    P, Q = F.subgroup(phi.source.elements), F.subgroup(psi.source.elements)
    if P.order != Q.order:
        return False
    src = F.subgroup(phi.image.elements)
    allowed = {m.images for m in F.homs_from(src)}
    back = dict(zip(phi.images, P.elements))
    for eta in F.isos(P, Q):
        e = eta.as_dict
        g = psi.as_dict
        if tuple(g[e[back[y]]] for y in src.elements) in allowed:
            return True
    return False


# ---------------------------------------------------------------- bisets


class Biset:
    """Multiset of orbit types for the acting group ``A``."""

    def __init__(self, A: Subgroup, counts=None, canonical: bool = False):
        self.A = A
        self._counts: dict[OrbitType, int] = {}
        for t, c in dict(counts or {}).items():
            if int(c) != c or c < 0:
                raise ValueError("biset multiplicities must be nonnegative integers")
            if not c:
                continue
            phi = t.phi if isinstance(t, OrbitType) else t
            ot = t if canonical and isinstance(t, OrbitType) else canonical_orbit_type(A, phi)
            self._counts[ot] = self._counts.get(ot, 0) + int(c)

    @classmethod
    def orbit(cls, A: Subgroup, phi: GroupMap, mult: int = 1) -> "Biset":
        return cls(A, {OrbitType(phi): mult})

    @property
    def counts(self) -> dict:
        return dict(sorted(self._counts.items()))

    def items(self):
        return sorted(self._counts.items())

    def __getitem__(self, t) -> int:
        if not isinstance(t, OrbitType):
            t = canonical_orbit_type(self.A, t)
        return self._counts.get(t, 0)

    def __eq__(self, other):
        return isinstance(other, Biset) and self.A == other.A and self._counts == other._counts

    def __hash__(self):
        return hash(tuple(sorted((t.key, c) for t, c in self._counts.items())))

    def __add__(self, other: "Biset") -> "Biset":
        out = dict(self._counts)
        for t, c in other._counts.items():
            out[t] = out.get(t, 0) + c
        return Biset(self.A, out, canonical=True)

    def __mul__(self, k: int) -> "Biset":
        return Biset(self.A, {t: k * c for t, c in self._counts.items()}, canonical=True)

    __rmul__ = __mul__

    def __le__(self, other: "Biset") -> bool:
        return all(other._counts.get(t, 0) >= c for t, c in self._counts.items())

    def __len__(self):
        return self.size

    def __repr__(self):
        parts = [(f"{c}·" if c > 1 else "") + repr(t) for t, c in self.items()]
        return "Biset(" + " + ".join(parts) + ")" if parts else "Biset(0)"

    @property
    def size(self) -> int:
        return sum(c * t.size(self.A) for t, c in self._counts.items())

    @property
    def orbit_count(self) -> int:
        return sum(self._counts.values())

    def fixed_count(self, probe: GroupMap) -> int:
        return sum(c * orbit_fixed_count(self.A, t, probe) for t, c in self._counts.items())

    def opposite(self) -> "Biset":
        return Biset(self.A, {t.phi.inverse(): c for t, c in self._counts.items()})

    def restrict_to(self, keep) -> "Biset":
        return Biset(self.A, {t: c for t, c in self._counts.items() if keep(t)}, canonical=True)

    def transport(self, sigma: GroupMap, A2: Subgroup) -> "Biset":
        """Image under an isomorphism ``sigma: A -> A2``."""
        s = sigma.as_dict
        G2 = A2.group
        out = {}
        for t, c in self._counts.items():
            P2 = Subgroup(G2, [s[x] for x in t.source.elements])
            m = {s[x]: s[y] for x, y in zip(*t.key)}
            out[GroupMap.from_dict(P2, m, G2)] = c
        return Biset(A2, out)


# -------------------------------------------------------- stabilization


@dataclass(frozen=True)
class BisetDeficiency:
    rep: OrbitType
    orbit: OrbitType
    deficiency: int
    weyl: int


def normalizer_order(A, phi: GroupMap) -> int:
    """``|N_{AxA}(P,phi)| = |N_phi| |C_A(phi P)|``."""
    A = _acting(A)
    return len(n_phi_psi(A, phi, phi)) * centralizer(A, phi.image).order


def weyl_order(A, phi: GroupMap) -> int:
    return normalizer_order(A, phi) // phi.source.order


def diagonal_class(F: FusionSystem, P: Subgroup) -> list[OrbitType]:
    """Orbit types ``[Q,psi]`` with ``Q`` in ``(P)_F`` and ``psi`` in ``F(Q,S)``."""
    seen = set()
    for Q in F.f_class(P):
        for psi in F.homs_from(Q):
            seen.add(canonical_orbit_type(F.S, psi))
    return sorted(seen)


def _ratio(num, den, witness, what):
    if num % den:
        raise NonIntegerCoefficient(f"{what} {num}/{den} is not an integer", witness, num, den)
    if num < 0:
        raise NegativeCoefficient(f"{what} {num}/{den} is negative", witness, num, den)
    return num // den


def _fixed(A, counts: dict, probe: GroupMap) -> int:
    return sum(c * orbit_fixed_count(A, t, probe) for t, c in counts.items())


def omega_basis_element(F: FusionSystem, P: Subgroup, trace: list | None = None) -> Biset:
    """Minimal F-semicharacteristic biset containing ``[P, incl]``.

    Level-by-level stabilization over twisted diagonals, descending in source
    order. Raises a ``StabilizationError`` on non-saturated input.
    """
    S = F.S
    if not F.is_fully_normalized(P):
        P = F.class_rep(P)
    top = P.identity_map()
    n_top = normalizer_order(S, top)
    counts: dict[OrbitType, int] = {}
    for t in diagonal_class(F, P):
        counts[t] = _ratio(n_top, normalizer_order(S, t.phi), t, "starting multiplicity")
    for level in sorted({c.order for c in F.classes() if c.order < P.order}, reverse=True):
        added = {}
        for c in F.classes().at_order(level):
            R = c.representative
            rep = canonical_orbit_type(S, R.identity_map())
            xr = _fixed(S, counts, rep.phi)
            for t in diagonal_class(F, R):
                if t == rep:
                    continue
                d = xr - _fixed(S, counts, t.phi)
                w = weyl_order(S, t.phi)
                k = _ratio(d, w, t, "stabilization coefficient")
                if trace is not None:
                    trace.append(BisetDeficiency(rep, t, d, w))
                if k:
                    added[t] = k
        counts.update(added)
    return Biset(S, counts, canonical=True)


def minimal_characteristic_biset(F: FusionSystem, trace: list | None = None) -> Biset:
    """``Lambda_F``: the basis element at ``S`` itself."""
    return omega_basis_element(F, F.S, trace)


lambda_f = minimal_characteristic_biset


def omega_basis(F: FusionSystem) -> dict:
    return {c.representative: omega_basis_element(F, c.representative) for c in F.classes()}


# ------------------------------------------------------------- verdicts


@dataclass
class BisetVerdict:
    holds: bool
    condition: str | None = None
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.holds


def is_semicharacteristic(F: FusionSystem, omega: Biset) -> BisetVerdict:
    """F-generated and F-stable.

    Stability is checked in the form ``|W^{(P,phi)}| = |W^{(P,incl)}| =
    |W^{(phi P, phi^-1)}|`` for every ``P`` and ``phi in F(P,S)``.
    """
    for t in omega.items():
        ot = t[0]
        if not F.contains(GroupMap(F.subgroup(ot.key[0]), ot.key[1], F.S.group)):
            return BisetVerdict(False, "generated", (ot,), "orbit stabilizer is not an F-twisted diagonal")
    for P in F.subgroups:
        base = omega.fixed_count(P.identity_map())
        for phi in F.homs(P):
            a = omega.fixed_count(phi)
            b = omega.fixed_count(phi.inverse())
            if not a == b == base:
                return BisetVerdict(False, "stable", (P, phi), f"fixed points {base}, {a}, {b}")
    return BisetVerdict(True)


def is_characteristic(F: FusionSystem, omega: Biset) -> BisetVerdict:
    v = is_semicharacteristic(F, omega)
    if not v:
        return v
    ratio = omega.size // F.S.order
    if ratio % F.p == 0:
        return BisetVerdict(False, "p-condition", None, f"|W|/|S| = {ratio} is divisible by {F.p}")
    return BisetVerdict(True)


def biset_of_group(G: FiniteGroup | FusionSystem, S: Subgroup | None = None) -> Biset:
    """``G`` as an ``(S,S)``-biset, one orbit per double coset ``S g S``.

    Given a fusion system with a realization, the result is expressed on
    that system's ``S`` so it compares directly with ``lambda_f``.
    """
    if isinstance(G, FusionSystem):
        if G.realization is None:
            raise ValueError("fusion system has no ambient group")
        A = G.S
        G, emb = G.realization
        emb = list(emb)
    else:
        A = S
        emb = list(range(G.order))
    back = {emb[x]: x for x in A.elements}
    H = A.group
    s_amb = [emb[x] for x in A.elements]
    covered = np.zeros(G.order, dtype=bool)
    counts: dict = {}
    for g in G:
        if covered[g]:
            continue
        for s in s_amb:
            sg = G.mul(s, g)
            for t in s_amb:
                covered[G.mul(sg, t)] = True
        src = [x for x in A.elements if G.conj(g, emb[x]) in back]
        imgs = [back[G.conj(g, emb[x])] for x in src]
        phi = GroupMap(Subgroup(H, src), imgs, H)
        counts[phi] = counts.get(phi, 0) + 1
    out = Biset(A, counts)
    if out.size != G.order:
        raise InternalCheckFailed("double coset orbits do not add up to |G|")
    return out


def decompose_biset(F: FusionSystem, omega: Biset) -> dict:
    """``{class representative: c_P}`` with ``omega = sum c_P Omega_P``."""
    v = is_semicharacteristic(F, omega)
    if not v:
        raise NotSemicharacteristic(f"biset fails the {v.condition} condition: {v.detail}")
    rest = dict(omega._counts)
    out = {}
    for c in F.classes():
        R = c.representative
        d = rest.get(canonical_orbit_type(F.S, R.identity_map()), 0)
        if not d:
            continue
        out[R] = d
        for t, k in omega_basis_element(F, R)._counts.items():
            rest[t] = rest.get(t, 0) - d * k
            if rest[t] < 0:
                raise InternalCheckFailed("negative remainder while decomposing a semicharacteristic biset")
    if any(rest.values()):
        raise InternalCheckFailed("nonzero remainder after decomposing a semicharacteristic biset")
    return out
