"""JSON formats for fusion systems, S-sets, bisets and K-normalizer inputs.

Elements are written as labels (strings). When reading, a string is looked up
as a label and an integer is taken as an index into the relevant group.

fusion spec, realized by a group::

    {"format": "fusebiset/1", "p": 2, "group": <group spec>, "sylow": "auto"}

``sylow`` may instead list the elements of a p-subgroup of the group.

fusion spec, generated::

    {"format": "fusebiset/1", "p": 2, "s": <group spec>,
     "subgroup": [...optional elements...],
     "generators": [[[x, y], ...], {"source": [...], "map": [[x, y], ...]}]}

A generator given as a list of pairs is the homomorphism on the subgroup
generated by the ``x`` values; the dict form lists the whole map.

``{"ref": "d8-a6"}`` in place of either spec loads a bundled file.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .bisets import Biset, OrbitType
from .constructions import build_group
from .errors import GroupSpecError
from .fusion import FusionSystem, fusion_of_group, generate_fusion
from .groups import FiniteGroup, GroupMap, Subgroup, hom_from_generators, sylow_p
from .knorm import AutSubgroup
from .stable import SSet

FORMAT = "fusebiset/1"


def bundled_names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files("fusebiset.data").iterdir() if p.name.endswith(".json"))


def load_json(source) -> dict:
    """Read a JSON document from a path, a bundled name, or a dict."""
    if isinstance(source, dict):
        doc = source
    else:
        path = Path(source)
        if path.is_file():
            text = path.read_text()
        else:
            name = path.name[:-5] if path.name.endswith(".json") else path.name
            res = resources.files("fusebiset.data") / f"{name}.json"
            if not res.is_file():
                raise GroupSpecError(f"no such file or bundled example: {source}")
            text = res.read_text()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GroupSpecError(f"invalid JSON in {source}: {exc}") from None
    if isinstance(doc, dict) and "ref" in doc:
        return load_json(doc["ref"])
    return doc


def _check_format(doc):
    fmt = doc.get("format", FORMAT) if isinstance(doc, dict) else FORMAT
    if fmt != FORMAT:
        raise GroupSpecError(f"unsupported format {fmt!r}")


def element(G: FiniteGroup, x) -> int:
    try:
        return G.index(x)
    except (KeyError, IndexError, ValueError):
        raise GroupSpecError(f"unknown element {x!r}") from None


def elements(G: FiniteGroup, xs) -> list[int]:
    return [element(G, x) for x in xs]


def subgroup(G: FiniteGroup, xs) -> Subgroup:
    try:
        return G.subgroup(elements(G, xs))
    except GroupSpecError:
        raise
    except Exception as exc:
        raise GroupSpecError(f"not a subgroup: {exc}") from None


def read_group(source) -> FiniteGroup:
    doc = load_json(source)
    _check_format(doc)
    return build_group(doc.get("group", doc) if "kind" not in doc else doc)


def read_map(G: FiniteGroup, spec, target: FiniteGroup | None = None) -> GroupMap:
    """A map given as ``[[x, y], ...]`` on generators or ``{"source": .., "map": ..}``."""
    target = target or G
    if isinstance(spec, dict):
        pairs = [(element(G, x), element(target, y)) for x, y in spec.get("map", [])]
        src = subgroup(G, spec["source"]) if "source" in spec else G.generate([x for x, _ in pairs])
        m = dict(pairs)
        if not pairs:
            m = {x: x for x in src.elements}
        if set(m) == src.set:
            return GroupMap.from_dict(src, m, target)
        return hom_from_generators(src, list(m.items()), target)
    pairs = [(element(G, x), element(target, y)) for x, y in spec]
    src = G.generate([x for x, _ in pairs])
    return hom_from_generators(src, pairs, target)


def read_fusion(source) -> FusionSystem:
    doc = load_json(source)
    _check_format(doc)
    try:
        p = int(doc["p"])
    except (KeyError, TypeError, ValueError):
        raise GroupSpecError("fusion spec needs an integer 'p'") from None
    name = doc.get("name", "")
    if "group" in doc:
        G = build_group(load_json(doc["group"]) if isinstance(doc["group"], str) else doc["group"])
        syl = doc.get("sylow", "auto")
        S = sylow_p(G, p) if syl == "auto" else subgroup(G, syl)
        return fusion_of_group(G, S, p, name=name)
    if "s" in doc:
        H = build_group(doc["s"])
        S = subgroup(H, doc["subgroup"]) if "subgroup" in doc else H.whole()
        gens = [read_map(H, g) for g in doc.get("generators", [])]
        return generate_fusion(S, p, gens, name=name)
    raise GroupSpecError("fusion spec needs either 'group' or 's'")


def read_k_spec(F: FusionSystem, source) -> tuple[Subgroup, AutSubgroup]:
    doc = load_json(source)
    _check_format(doc)
    G = F.S.group
    P = F.subgroup(elements(G, doc["p_subgroup"])) if "p_subgroup" in doc else F.S
    gens = []
    for g in doc.get("k_generators", []):
        m = read_map(G, g)
        if m.source != P:
            m = GroupMap(P, [m(x) for x in P.elements], G) if P.set <= m.source.set else m
        gens.append(m)
    kind = doc.get("k", "generated")
    if kind == "inner":
        return P, AutSubgroup.inner(P)
    if kind == "trivial":
        return P, AutSubgroup.trivial(P)
    if kind == "aut_f":
        return P, AutSubgroup(P, F.aut(P))
    return P, AutSubgroup.generated(P, gens)


def read_diagonal(F: FusionSystem, source) -> GroupMap:
    doc = load_json(source) if not isinstance(source, list) else source
    if isinstance(doc, dict):
        _check_format(doc)
        doc = {k: v for k, v in doc.items() if k != "format"}
    return read_map(F.S.group, doc)


def read_biset(F: FusionSystem, source) -> Biset:
    doc = load_json(source) if not isinstance(source, list) else source
    if isinstance(doc, dict):
        _check_format(doc)
        for key in ("lambda", "centric_minimal", "N_Lambda_K"):
            if "orbits" not in doc and isinstance(doc.get(key), dict):
                doc = doc[key]
        doc = doc.get("orbits", [])
    G = F.S.group
    counts = {}
    for entry in doc:
        phi = read_map(G, {"source": entry["source"], "map": entry.get("map", [])})
        counts[phi] = counts.get(phi, 0) + int(entry.get("mult", 1))
    return Biset(F.S, counts)


def read_sset(F: FusionSystem, source) -> SSet:
    doc = load_json(source) if not isinstance(source, list) else source
    if isinstance(doc, dict):
        _check_format(doc)
        doc = doc.get("orbits", [])
    G = F.S.group
    return SSet(F.S, {F.subgroup(elements(G, e["subgroup"])): int(e.get("mult", 1)) for e in doc})


# ----------------------------------------------------------------- writing


def subgroup_json(P: Subgroup) -> list[str]:
    return P.labels()


def map_json(phi: GroupMap) -> list[list[str]]:
    G, T = phi.source.group, phi.target
    return [[G.labels[x], T.labels[y]] for x, y in zip(phi.source.elements, phi.images)]


def orbit_label(t: OrbitType) -> str:
    return repr(t)


def biset_json(omega: Biset) -> dict:
    orbits = []
    for t, c in omega.items():
        orbits.append(
            {
                "source": subgroup_json(t.source),
                "map": map_json(t.phi),
                "identity": t.is_identity(),
                "mult": c,
                "orbit_size": t.size(omega.A),
            }
        )
    return {"format": FORMAT, "orbits": orbits, "size": omega.size}


def sset_json(X: SSet) -> dict:
    return {
        "format": FORMAT,
        "orbits": [{"subgroup": subgroup_json(Q), "mult": c} for Q, c in X.coeffs.items()],
        "size": X.size,
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
