"""Finite groups as dense multiplication tables, subgroups and homomorphisms.

Elements of a :class:`FiniteGroup` are the integers ``0..order-1``. A
:class:`Subgroup` is a sorted tuple of element indices of its parent group, and
a :class:`GroupMap` is a total map on the elements of its source subgroup.
Everything here is exhaustive search, which is the right tool at the sizes this
package targets (ambient groups of a few hundred elements, p-groups of order at
most 128).
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import CapExceeded, GroupSpecError, NotAHomomorphism

TABLE_CAP = 1000
LATTICE_CAP = 256
AUT_CAP = 64


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[a, b]`` is the index of the product ``a*b``. Labels are optional
    human-readable names for the elements; builders in
    :mod:`fusebiset.constructions` always put the identity at index 0.
    """

    def __init__(self, table, labels=None, label="", generators=None, check=True):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupSpecError("multiplication table must be a non-empty square array")
        n = table.shape[0]
        if n > TABLE_CAP:
            raise CapExceeded(f"group of order {n} exceeds the table cap {TABLE_CAP}")
        if table.min() < 0 or table.max() >= n:
            raise GroupSpecError("multiplication table has entries outside 0..order-1")
        ident = np.arange(n)
        if not (np.sort(table, axis=0) == ident[:, None]).all() or not (
            np.sort(table, axis=1) == ident[None, :]
        ).all():
            raise GroupSpecError("multiplication table is not a Latin square")
        units = [e for e in range(n) if (table[e] == ident).all() and (table[:, e] == ident).all()]
        if not units:
            raise GroupSpecError("multiplication table has no two-sided identity")
        self.identity = units[0]
        if check:
            for a in range(n):
                # (a*b)*c == a*(b*c) for all b, c
                if not (table[table[a]] == table[a][table]).all():
                    raise GroupSpecError("multiplication table is not associative")
        table.setflags(write=False)
        self.table = table
        self._rows = table.tolist()
        inv = np.argmax(table == self.identity, axis=1)
        self._inv = inv.tolist()
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = [str(x) for x in labels]
        if len(labels) != n or len(set(labels)) != n:
            raise GroupSpecError("element labels must be unique and one per element")
        self.labels = labels
        self._index = {x: i for i, x in enumerate(labels)}
        self.label = label
        self.generators = list(generators) if generators is not None else None

    @property
    def order(self) -> int:
        return len(self._rows)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def __repr__(self):
        name = self.label or "FiniteGroup"
        return f"<{name} of order {self.order}>"

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return self._rows[self._rows[g][x]][self._inv[g]]

    def power(self, x: int, k: int) -> int:
        y = self.identity
        for _ in range(k):
            y = self._rows[y][x]
        return y

    @cached_property
    def element_orders(self) -> list[int]:
        orders = []
        for x in range(self.order):
            k, y = 1, x
            while y != self.identity:
                y = self._rows[y][x]
                k += 1
            orders.append(k)
        return orders

    def index(self, element) -> int:
        """Element index from a label (or pass an int through)."""
        if isinstance(element, (int, np.integer)) and not isinstance(element, bool):
            element = int(element)
            if not 0 <= element < self.order:
                raise GroupSpecError(f"element index {element} out of range")
            return element
        try:
            return self._index[str(element)]
        except KeyError:
            raise GroupSpecError(f"unknown element label {element!r}") from None

    def whole(self) -> "Subgroup":
        return Subgroup(self, range(self.order))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, [self.identity])

    def subgroup(self, elements) -> "Subgroup":
        """Checked constructor: ``elements`` must already be closed."""
        H = Subgroup(self, [self.index(x) for x in elements])
        if not is_subgroup(H):
            raise GroupSpecError("element set is not a subgroup")
        return H

    def generate(self, gens) -> "Subgroup":
        return generate(self, [self.index(x) for x in gens])


class Subgroup:
    """A subgroup of ``group``, identified by its sorted element set."""

    def __init__(self, group: FiniteGroup, elements: Iterable[int]):
        self.group = group
        self.elements = tuple(sorted(set(int(x) for x in elements)))

    @cached_property
    def set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.set

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.group is other.group and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other: "Subgroup"):
        return self.set <= other.set

    def __lt__(self, other: "Subgroup"):
        return self.set < other.set

    @property
    def sort_key(self):
        return (len(self.elements), self.elements)

    def labels(self) -> list[str]:
        return [self.group.labels[x] for x in self.elements]

    def __repr__(self):
        shown = ",".join(self.labels()) if self.order <= 8 else f"{self.order} elements"
        return f"Subgroup({{{shown}}})"

    @cached_property
    def generators(self) -> list[int]:
        return small_generating_set(self)

    def identity_map(self) -> "GroupMap":
        return GroupMap(self, self.elements)

    def inclusion(self) -> "GroupMap":
        return self.identity_map()


Ambient = Union[FiniteGroup, Subgroup]


def _sub(H: Ambient) -> Subgroup:
    return H.whole() if isinstance(H, FiniteGroup) else H


class GroupMap:
    """A map from a subgroup to a group, stored on every source element.

    ``images[i]`` is the image of ``source.elements[i]``. The target group
    defaults to the source's parent. Equality compares source and images.
    """

    def __init__(self, source: Subgroup, images: Sequence[int], target: FiniteGroup | None = None):
        self.source = source
        self.images = tuple(int(y) for y in images)
        self.target = target if target is not None else source.group
        if len(self.images) != len(source.elements):
            raise NotAHomomorphism("image list does not match the source size")

    @classmethod
    def from_dict(cls, source: Subgroup, mapping: dict, target=None) -> "GroupMap":
        return cls(source, [mapping[x] for x in source.elements], target)

    @cached_property
    def as_dict(self) -> dict:
        return dict(zip(self.source.elements, self.images))

    def __call__(self, x: int) -> int:
        return self.as_dict[x]

    @cached_property
    def key(self):
        return (self.source.elements, self.images)

    def __eq__(self, other):
        if not isinstance(other, GroupMap):
            return NotImplemented
        return self.key == other.key and self.target is other.target

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        G, T = self.source.group, self.target
        pairs = ", ".join(f"{G.labels[x]}->{T.labels[y]}" for x, y in zip(self.source.elements, self.images))
        return f"GroupMap({pairs})"

    @cached_property
    def image(self) -> Subgroup:
        return Subgroup(self.target, self.images)

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_homomorphism(self) -> bool:
        G, T = self.source.group, self.target
        f = self.as_dict
        for x in self.source.elements:
            fx = f[x]
            for y in self.source.elements:
                if f.get(G.mul(x, y)) != T.mul(fx, f[y]):
                    return False
        return True

    def check(self) -> "GroupMap":
        if not self.is_homomorphism():
            raise NotAHomomorphism(f"{self!r} is not multiplicative")
        if not self.is_injective():
            raise NotAHomomorphism(f"{self!r} is not injective")
        return self

    def restrict(self, sub: Subgroup) -> "GroupMap":
        f = self.as_dict
        return GroupMap(sub, [f[x] for x in sub.elements], self.target)

    def compose(self, inner: "GroupMap") -> "GroupMap":
        """``self ∘ inner``; the image of ``inner`` must lie in ``self.source``."""
        f = self.as_dict
        return GroupMap(inner.source, [f[y] for y in inner.images], self.target)

    def inverse(self) -> "GroupMap":
        """Inverse isomorphism from the image back onto the source."""
        back = dict(zip(self.images, self.source.elements))
        return GroupMap(self.image, [back[y] for y in self.image.elements], self.source.group)

    def is_identity(self) -> bool:
        return self.images == self.source.elements


# ---------------------------------------------------------------- subgroups


def generate(group: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Subgroup generated by ``gens`` (closure under right multiplication)."""
    rows = group._rows
    gens = sorted(set(int(g) for g in gens))
    elems = {group.identity}
    frontier = [group.identity]
    while frontier:
        new = []
        for x in frontier:
            row = rows[x]
            for g in gens:
                y = row[g]
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return Subgroup(group, elems)


def is_subgroup(H: Subgroup) -> bool:
    G = H.group
    s = H.set
    if G.identity not in s:
        return False
    return all(G.mul(x, y) in s for x in H.elements for y in H.elements)


def small_generating_set(H: Subgroup) -> list[int]:
    """Greedy generating set: repeatedly add an element of largest order not yet covered."""
    G = H.group
    orders = G.element_orders
    gens: list[int] = []
    current = {G.identity}
    while len(current) < H.order:
        best = max((x for x in H.elements if x not in current), key=lambda x: (orders[x], -x))
        gens.append(best)
        current = generate(G, gens).set
    return gens


def conjugate(g: int, P: Subgroup) -> Subgroup:
    """``g P g^-1``."""
    G = P.group
    return Subgroup(G, [G.conj(g, x) for x in P.elements])


def conjugation_map(g: int, P: Subgroup) -> GroupMap:
    G = P.group
    return GroupMap(P, [G.conj(g, x) for x in P.elements])


def transporter(H: Ambient, P: Subgroup, Q: Subgroup) -> list[int]:
    """Elements ``h`` of ``H`` with ``h P h^-1 <= Q``."""
    H = _sub(H)
    G = H.group
    q = Q.set
    return [h for h in H.elements if all(G.conj(h, x) in q for x in P.elements)]


def normalizer(H: Ambient, P: Subgroup) -> Subgroup:
    H = _sub(H)
    return Subgroup(H.group, transporter(H, P, P))


def centralizer(H: Ambient, P: Subgroup) -> Subgroup:
    H = _sub(H)
    G = H.group
    gens = P.generators
    return Subgroup(G, [h for h in H.elements if all(G.mul(h, x) == G.mul(x, h) for x in gens)])


def center(P: Subgroup) -> Subgroup:
    return centralizer(P, P)


def is_normal(H: Ambient, P: Subgroup) -> bool:
    H = _sub(H)
    return normalizer(H, P).order == H.order


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def is_p_group_order(n: int, p: int) -> bool:
    return p_part(n, p) == n


def cyclic_subgroups(H: Ambient) -> list[Subgroup]:
    H = _sub(H)
    seen = {}
    for x in H.elements:
        C = generate(H.group, [x])
        seen.setdefault(C.elements, C)
    return sorted(seen.values(), key=lambda C: C.sort_key)


def all_subgroups(H: Ambient, cap: int = LATTICE_CAP) -> list[Subgroup]:
    """Every subgroup of ``H``, sorted by order then element tuple.

    Breadth-first: each known subgroup is joined with every cyclic subgroup it
    does not contain. Every subgroup is reached this way because it is the join
    of the cyclic subgroups of its elements.
    """
    H = _sub(H)
    if H.order > cap:
        raise CapExceeded(f"full subgroup lattice limited to order {cap}, got {H.order}")
    G = H.group
    cyclics = [(C, C.generators) for C in cyclic_subgroups(H)]
    trivial = Subgroup(G, [G.identity])
    found = {trivial.elements: (trivial, [])}
    queue = deque([trivial.elements])
    while queue:
        A, gens = found[queue.popleft()]
        for C, cgens in cyclics:
            if C.set <= A.set:
                continue
            new_gens = gens + cgens
            B = generate(G, new_gens)
            if B.elements not in found:
                found[B.elements] = (B, new_gens)
                queue.append(B.elements)
    return sorted((B for B, _ in found.values()), key=lambda B: B.sort_key)


def subgroups_of(P: Subgroup, lattice: Sequence[Subgroup]) -> list[Subgroup]:
    return [Q for Q in lattice if Q.set <= P.set]


def conjugacy_class_of_subgroup(H: Ambient, P: Subgroup) -> list[Subgroup]:
    H = _sub(H)
    seen = {}
    for h in H.elements:
        C = conjugate(h, P)
        seen.setdefault(C.elements, C)
    return sorted(seen.values(), key=lambda C: C.sort_key)


def canonical_conjugate(H: Ambient, P: Subgroup) -> Subgroup:
    """The ``H``-conjugate of ``P`` with lexicographically least element tuple."""
    return conjugacy_class_of_subgroup(H, P)[0]


def element_classes(H: Ambient) -> list[list[int]]:
    H = _sub(H)
    G = H.group
    seen: set[int] = set()
    classes = []
    for x in H.elements:
        if x in seen:
            continue
        cls = sorted({G.conj(h, x) for h in H.elements})
        seen.update(cls)
        classes.append(cls)
    return classes


def normal_closure(H: Ambient, X: Iterable[int]) -> Subgroup:
    H = _sub(H)
    G = H.group
    return generate(G, {G.conj(h, x) for h in H.elements for x in X})


def sylow_p(H: Ambient, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown one factor of p at a time inside normalizers."""
    if not is_prime(p):
        raise GroupSpecError(f"{p} is not prime")
    H = _sub(H)
    G = H.group
    target = p_part(H.order, p)
    P = Subgroup(G, [G.identity])
    while P.order < target:
        N = normalizer(H, P)
        for g in N.elements:
            if g not in P.set and G.power(g, p) in P.set:
                P = generate(G, P.generators + [g])
                break
        else:  # pragma: no cover - impossible by Sylow's theorem
            raise AssertionError("no p-element in the normalizer quotient")
    return P


def is_sylow(H: Ambient, S: Subgroup, p: int) -> bool:
    H = _sub(H)
    return S.set <= H.set and S.order == p_part(H.order, p)


def op_subgroup(H: Ambient, p: int) -> Subgroup:
    """O_p(H): the subgroup generated by all normal closures that are p-groups."""
    return _largest_normal(H, lambda n: is_p_group_order(n, p))


def op_prime_subgroup(H: Ambient, p: int) -> Subgroup:
    """O_{p'}(H): the largest normal subgroup of order prime to p."""
    return _largest_normal(H, lambda n: n % p != 0)


def _largest_normal(H: Ambient, accept) -> Subgroup:
    H = _sub(H)
    G = H.group
    gens: list[int] = []
    for cls in element_classes(H):
        x = cls[0]
        if not accept(G.element_orders[x]):
            continue
        N = normal_closure(H, [x])
        if accept(N.order):
            gens.extend(N.generators)
    return generate(G, gens)


# ------------------------------------------------------------ homomorphisms


def _extend(source_group: FiniteGroup, gens, images, target: FiniteGroup):
    """Map defined by ``gens[i] -> images[i]``, or None if that is not a homomorphism."""
    rows, trows = source_group._rows, target._rows
    m = {source_group.identity: target.identity}
    queue = [source_group.identity]
    for x in queue:
        fx = m[x]
        for g, h in zip(gens, images):
            y = rows[x][g]
            v = trows[fx][h]
            old = m.get(y)
            if old is None:
                m[y] = v
                queue.append(y)
            elif old != v:
                return None
    return m


def hom_from_generators(source: Subgroup, pairs, target: FiniteGroup | None = None) -> GroupMap:
    """Extend generator images to a homomorphism on ``source``."""
    target = target if target is not None else source.group
    gens = [g for g, _ in pairs]
    imgs = [h for _, h in pairs]
    m = _extend(source.group, gens, imgs, target)
    if m is None or set(m) != source.set:
        raise NotAHomomorphism("generator images do not define a homomorphism on the source")
    return GroupMap.from_dict(source, m, target)


def homomorphisms(P: Subgroup, T: Ambient, injective: bool = True) -> Iterator[GroupMap]:
    """All (injective) homomorphisms ``P -> T`` by backtracking over generator images."""
    T = _sub(T)
    G, TG = P.group, T.group
    gens = P.generators
    gorders = [G.element_orders[g] for g in gens]
    torders = TG.element_orders
    cands = []
    for k in gorders:
        if injective:
            cands.append([t for t in T.elements if torders[t] == k])
        else:
            cands.append([t for t in T.elements if k % torders[t] == 0])

    def rec(i, chosen):
        if i == len(gens):
            m = _extend(G, gens, chosen, TG)
            if m is None:
                return
            if injective and len(set(m.values())) != len(m):
                return
            yield GroupMap.from_dict(P, m, TG)
            return
        for t in cands[i]:
            trial = chosen + [t]
            # prune on the subgroup generated so far
            if i + 1 < len(gens) and _extend(G, gens[: i + 1], trial, TG) is None:
                continue
            yield from rec(i + 1, trial)

    if not gens:
        yield GroupMap(P, [TG.identity], TG)
        return
    yield from rec(0, [])


def automorphisms(P: Subgroup, cap: int = AUT_CAP) -> list[GroupMap]:
    if P.order > cap:
        raise CapExceeded(f"automorphism enumeration limited to order {cap}")
    return [f for f in homomorphisms(P, P, injective=True) if f.image == P]


def isomorphisms(P: Subgroup, Q: Subgroup) -> Iterator[GroupMap]:
    if P.order != Q.order:
        return iter(())
    return (f for f in homomorphisms(P, Q, injective=True))


def maps_group(maps: Sequence[GroupMap], label: str = "") -> tuple[FiniteGroup, list[GroupMap]]:
    """Multiplication table of a set of automorphisms closed under composition.

    Returns the group and the map list in index order (identity first).
    """
    maps = list(maps)
    ident = [m for m in maps if m.is_identity()]
    if not ident:
        raise GroupSpecError("automorphism set does not contain the identity")
    maps = ident[:1] + [m for m in maps if not m.is_identity()]
    pos = {m.key: i for i, m in enumerate(maps)}
    table = []
    for a in maps:
        row = []
        for b in maps:
            k = a.compose(b).key
            if k not in pos:
                raise GroupSpecError("automorphism set is not closed under composition")
            row.append(pos[k])
        table.append(row)
    return FiniteGroup(table, label=label, check=False), maps


def close_maps(gens: Sequence[GroupMap], base: Subgroup) -> list[GroupMap]:
    """Group of automorphisms of ``base`` generated by ``gens``."""
    ident = base.identity_map()
    found = {ident.key: ident}
    queue = [ident]
    for m in queue:
        for g in gens:
            if g.source != base or g.image != base:
                raise GroupSpecError("generator is not an automorphism of the base subgroup")
            c = g.compose(m)
            if c.key not in found:
                found[c.key] = c
                queue.append(c)
    return sorted(found.values(), key=lambda m: m.images)


def induced_group(H: Subgroup, label: str = "") -> tuple[FiniteGroup, tuple[int, ...]]:
    """Re-index a subgroup as a group in its own right.

    Returns the new group and the embedding (new index -> parent index). The
    identity is placed at index 0 and labels are inherited from the parent.
    """
    G = H.group
    order = [G.identity] + [x for x in H.elements if x != G.identity]
    pos = {x: i for i, x in enumerate(order)}
    table = [[pos[G.mul(a, b)] for b in order] for a in order]
    labels = [G.labels[x] for x in order]
    return FiniteGroup(table, labels=labels, label=label, check=False), tuple(order)


def fingerprint(H: Ambient) -> dict:
    """Order, exponent and number of conjugacy classes (used in reports only)."""
    H = _sub(H)
    orders = [H.group.element_orders[x] for x in H.elements]
    exponent = 1
    for k in set(orders):
        exponent = exponent * k // _gcd(exponent, k)
    return {"order": H.order, "exponent": exponent, "classes": len(element_classes(H))}


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
