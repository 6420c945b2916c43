"""Named groups and the group-spec JSON format.

A group spec is a dict with a ``kind`` key:

``{"kind": "named", "name": "dihedral", "n": 8}``
    ``name`` is one of cyclic, dihedral (``n`` is the order), quaternion
    (``n`` = 8), symmetric, alternating (``n`` <= 6 points).
``{"kind": "perm", "degree": 6, "generators": ["(1,2,3,4)(5,6)", ...]}``
    Permutation generators in cycle notation on points ``1..degree`` or as
    0-based one-line image lists; at most 16 points.
``{"kind": "table", "table": [[...], ...], "labels": [...]}``
    Explicit multiplication table (identity may be anywhere; it is checked).
``{"kind": "product", "factors": [spec, spec, ...]}``
``{"kind": "semidirect", "normal": spec, "acting": spec, "action": [...]}``
    ``action[i]`` maps generator labels of the normal factor to their images
    under the i-th generator of the acting factor.

Every builder puts the identity at index 0 and orders elements
deterministically.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import CapExceeded, GroupSpecError
from .groups import TABLE_CAP, FiniteGroup, _extend, generate

PERM_DEGREE_CAP = 16


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError("cyclic group needs n >= 1")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    labels = ["e", "a"] + [f"a^{k}" for k in range(2, n)]
    return FiniteGroup(table, labels=labels[:n], label=f"C{n}", generators=[1] if n > 1 else [], check=False)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order ``2m``: elements ``s^f r^k``."""
    if order < 4 or order % 2:
        raise GroupSpecError("dihedral group order must be even and >= 4")
    m = order // 2
    elems = [(f, k) for f in (0, 1) for k in range(m)]
    pos = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        (f1, k1), (f2, k2) = x, y
        return ((f1 + f2) % 2, ((-1) ** f2 * k1 + k2) % m)

    table = [[pos[mul(x, y)] for y in elems] for x in elems]
    labels = []
    for f, k in elems:
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        labels.append(("s" + r) if f else (r or "e"))
    return FiniteGroup(table, labels=labels, label=f"D{order}", generators=[1, m], check=False)


_QUAT = {  # unit * unit -> (sign, unit)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion(order: int = 8) -> FiniteGroup:
    if order != 8:
        raise GroupSpecError("only the quaternion group of order 8 is built in")
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]
    pos = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = _QUAT[(u1, u2)]
            row.append(pos[(s * s1 * s2, u)])
        table.append(row)
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return FiniteGroup(table, labels=labels, label="Q8", generators=[pos[(1, "i")], pos[(1, "j")]], check=False)


def parse_permutation(text, degree: int) -> tuple[int, ...]:
    """Cycle notation ``"(1,2,3)(4,5)"`` (1-based) or a 0-based image list."""
    if isinstance(text, (list, tuple)):
        perm = tuple(int(x) for x in text)
        if sorted(perm) != list(range(degree)):
            raise GroupSpecError(f"{text!r} is not a permutation of {degree} points")
        return perm
    images = list(range(degree))
    text = str(text).strip()
    if text in ("", "()", "e", "1"):
        return tuple(images)
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)", "", text).strip():
        raise GroupSpecError(f"cannot parse permutation {text!r}")
    for cyc in cycles:
        pts = [int(x) - 1 for x in re.split(r"[,\s]+", cyc.strip()) if x]
        if any(not 0 <= x < degree for x in pts) or len(set(pts)) != len(pts):
            raise GroupSpecError(f"bad cycle ({cyc}) for degree {degree}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    if sorted(images) != list(range(degree)):
        raise GroupSpecError(f"cycles in {text!r} overlap")
    return tuple(images)


def cycle_string(perm: tuple[int, ...]) -> str:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def permutation_group(degree: int, generators, label: str = "", cap: int = TABLE_CAP) -> FiniteGroup:
    """Closure of permutation generators; ``(x*y)(i) = x(y(i))``."""
    if degree > PERM_DEGREE_CAP:
        raise CapExceeded(f"permutation degree limited to {PERM_DEGREE_CAP}")
    gens = [parse_permutation(g, degree) for g in generators]
    ident = tuple(range(degree))
    elems = [ident]
    pos = {ident: 0}
    for x in elems:
        for g in gens:
            y = tuple(x[g[i]] for i in range(degree))
            if y not in pos:
                if len(elems) >= cap:
                    raise CapExceeded(f"permutation closure exceeds {cap} elements")
                pos[y] = len(elems)
                elems.append(y)
    arr = np.array(elems, dtype=np.int64)
    # table[a, b] = index of a∘b, i.e. the row a[b[i]]
    codes = {e: i for i, e in enumerate(elems)}
    table = np.empty((len(elems), len(elems)), dtype=np.int64)
    for a, pa in enumerate(arr):
        composed = pa[arr]
        table[a] = [codes[tuple(row)] for row in composed.tolist()]
    labels = [cycle_string(e) for e in elems]
    return FiniteGroup(table, labels=labels, label=label, generators=[pos[g] for g in gens], check=False)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise GroupSpecError("symmetric groups are built for n <= 6")
    gens = [] if n == 1 else (["(1,2)"] if n == 2 else ["(1,2)", "(" + ",".join(map(str, range(1, n + 1))) + ")"])
    return permutation_group(n, gens, label=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise GroupSpecError("alternating groups are built for n <= 6")
    gens = [f"({i},{i + 1},{i + 2})" for i in range(1, n - 1)]
    return permutation_group(n, gens, label=f"A{n}")


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    if not factors:
        raise GroupSpecError("direct product needs at least one factor")
    G = factors[0]
    for H in factors[1:]:
        G = _pair_product(G, H)
    return G


def _pair_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    ge = [G.identity] + [x for x in G if x != G.identity]
    he = [H.identity] + [y for y in H if y != H.identity]
    elems = [(x, y) for x in ge for y in he]
    pos = {e: i for i, e in enumerate(elems)}
    table = [[pos[(G.mul(a, c), H.mul(b, d))] for c, d in elems] for a, b in elems]
    labels = [f"({G.labels[x]},{H.labels[y]})" for x, y in elems]
    gens = [pos[(g, H.identity)] for g in (G.generators or [])] + [pos[(G.identity, h)] for h in (H.generators or [])]
    name = f"{G.label or 'G'}x{H.label or 'H'}"
    return FiniteGroup(table, labels=labels, label=name, generators=gens, check=False)


def semidirect_product(N: FiniteGroup, H: FiniteGroup, action, h_generators=None) -> FiniteGroup:
    """``N ⋊ H`` with ``(n1,h1)(n2,h2) = (n1·θ(h1)(n2), h1h2)``.

    ``action`` lists, for each generator of ``H``, a dict from generator labels
    (or indices) of ``N`` to their images. Index order: the elements of ``N``
    (with trivial ``H`` part) come first.
    """
    hgens = list(h_generators if h_generators is not None else (H.generators or []))
    if len(action) != len(hgens):
        raise GroupSpecError("action must give one automorphism per generator of the acting group")
    wholeN = N.whole()
    autos = []
    for amap in action:
        try:
            pairs = [(N.index(k), N.index(v)) for k, v in dict(amap).items()]
        except (TypeError, ValueError) as exc:
            raise GroupSpecError(f"malformed action map {amap!r}") from exc
        m = _extend(N, [a for a, _ in pairs], [b for _, b in pairs], N)
        if m is None or set(m) != wholeN.set or len(set(m.values())) != N.order:
            raise GroupSpecError(f"action map {amap!r} is not an automorphism of the normal factor")
        autos.append(tuple(m[x] for x in range(N.order)))
    # theta: H -> Aut(N), extended along generator words and checked for consistency
    ident = tuple(range(N.order))
    theta = {H.identity: ident}
    queue = [H.identity]
    for h in queue:
        for g, a in zip(hgens, autos):
            y = H.mul(h, g)
            composed = tuple(theta[h][a[x]] for x in range(N.order))
            if y not in theta:
                theta[y] = composed
                queue.append(y)
            elif theta[y] != composed:
                raise GroupSpecError("action maps do not define a homomorphism into Aut(N)")
    if len(theta) != H.order:
        raise GroupSpecError("acting-group generators do not generate the acting group")
    he = [H.identity] + [y for y in H if y != H.identity]
    ne = [N.identity] + [x for x in N if x != N.identity]
    elems = [(n, h) for h in he for n in ne]
    pos = {e: i for i, e in enumerate(elems)}
    table = [[pos[(N.mul(n1, theta[h1][n2]), H.mul(h1, h2))] for n2, h2 in elems] for n1, h1 in elems]
    labels = []
    for n, h in elems:
        if h == H.identity:
            labels.append(N.labels[n])
        elif n == N.identity:
            labels.append(H.labels[h])
        else:
            labels.append(f"{N.labels[n]}*{H.labels[h]}")
    if len(set(labels)) != len(labels):
        labels = [f"({N.labels[n]},{H.labels[h]})" for n, h in elems]
    gens = [pos[(g, H.identity)] for g in (N.generators or generate(N, range(N.order)).generators)]
    gens += [pos[(N.identity, g)] for g in hgens]
    name = f"{N.label or 'N'}:{H.label or 'H'}"
    return FiniteGroup(table, labels=labels, label=name, generators=gens, check=False)


NAMED = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "quaternion": quaternion,
    "symmetric": symmetric,
    "alternating": alternating,
}


def build_group(spec) -> FiniteGroup:
    """Build a :class:`FiniteGroup` from a group-spec dict (see module docstring)."""
    if isinstance(spec, FiniteGroup):
        return spec
    if not isinstance(spec, dict) or "kind" not in spec:
        raise GroupSpecError("group spec must be a dict with a 'kind' key")
    kind = spec["kind"]
    try:
        if kind == "named":
            name = spec["name"]
            if name not in NAMED:
                raise GroupSpecError(f"unknown named group {name!r}")
            return NAMED[name](int(spec.get("n", 8)))
        if kind == "perm":
            return permutation_group(int(spec["degree"]), spec["generators"], label=spec.get("label", ""))
        if kind == "table":
            return FiniteGroup(spec["table"], labels=spec.get("labels"), label=spec.get("label", ""))
        if kind == "product":
            return direct_product(*[build_group(f) for f in spec["factors"]])
        if kind == "semidirect":
            N = build_group(spec["normal"])
            H = build_group(spec["acting"])
            hgens = spec.get("acting_generators")
            if hgens is not None:
                hgens = [H.index(x) for x in hgens]
            return semidirect_product(N, H, spec["action"], hgens)
    except KeyError as exc:
        raise GroupSpecError(f"group spec of kind {kind!r} is missing {exc}") from None
    raise GroupSpecError(f"unknown group spec kind {kind!r}")
