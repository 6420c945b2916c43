"""Command-line interface: ``fusebiset <command> <spec files>``.

Every command prints one JSON document. Exit codes: 0 computed / verdict
true, 1 verdict false, 2 bad input, 3 size cap exceeded, 4 internal check
failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import io
from .bisets import (
    brute_fixed_count,
    canonical_orbit_type,
    decompose_biset,
    is_characteristic,
    is_semicharacteristic,
    lambda_f,
    orbit_fixed_count,
)
from .centric import centric_minimal, centric_subgroups, nonextendable_classes, truncate_centric
from .errors import (
    CapExceeded,
    FusebisetError,
    InternalCheckFailed,
    NotAHomomorphism,
    NotInFusionSystem,
    NotSemicharacteristic,
    NotStable,
    StabilizationError,
)
from .fusion import is_saturated, normalizer_map_check
from .knorm import verify_k_normalizer_theorems
from .models import is_model, verify_model_theorem
from .stable import basis_element

FORMAT = io.FORMAT


def _v_p(n: int, p: int) -> int:
    k = 0
    while n and n % p == 0:
        n //= p
        k += 1
    return k


def _system(F) -> dict:
    return {"name": F.name, "p": F.p, "S": io.subgroup_json(F.S), "order": F.S.order}


def _stab_error(exc: StabilizationError) -> dict:
    w = exc.witness
    return {"error": type(exc).__name__, "message": str(exc), "witness": repr(w)}


def cmd_lambda(args) -> tuple[dict, int]:
    F = io.read_fusion(args.fusion)
    out = {"format": FORMAT, "system": _system(F)}
    sat = is_saturated(F)
    out["saturated"] = bool(sat)
    try:
        L = lambda_f(F)
    except StabilizationError as exc:
        out["stabilization"] = _stab_error(exc)
        return out, 1
    ratio = L.size // F.S.order
    out_f = F.out_order()
    out["lambda"] = io.biset_json(L)
    out["orbit_count"] = L.orbit_count
    out["size"] = L.size
    out["size_over_S"] = ratio
    out["p_valuation"] = _v_p(ratio, F.p)
    out["out_F_S"] = out_f
    out["congruence"] = {
        "statement": f"|Lambda|/|S| = {ratio} = {ratio % F.p} mod {F.p}, |Out_F(S)| = {out_f} = {out_f % F.p} mod {F.p}",
        "holds": (ratio - out_f) % F.p == 0,
    }
    return out, 0 if sat else 1


def cmd_basis(args) -> tuple[dict, int]:
    F = io.read_fusion(args.fusion)
    if args.subgroup:
        P = F.subgroup(io.elements(F.S.group, args.subgroup))
        reps = [P]
    else:
        reps = [c.representative for c in F.classes()]
    rows = []
    code = 0
    for P in reps:
        row = {"subgroup": io.subgroup_json(P), "class_size": len(F.f_class(P))}
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            try:
                X = basis_element(F, P)
                row["X"] = io.sset_json(X)
                row["representative"] = io.subgroup_json(F.class_rep(P))
            except StabilizationError as exc:
                row["stabilization"] = _stab_error(exc)
                code = 1
        rows.append(row)
    return {"format": FORMAT, "system": _system(F), "basis": rows}, code


def cmd_verify(args) -> tuple[dict, int]:
    F = io.read_fusion(args.fusion)
    omega = io.read_biset(F, args.biset)
    semi = is_semicharacteristic(F, omega)
    char = is_characteristic(F, omega)

    def verdict(v):
        d = {"holds": v.holds}
        if not v.holds:
            d["condition"] = v.condition
            d["witness"] = repr(v.witness)
            d["detail"] = v.detail
        return d

    out = {
        "format": FORMAT,
        "system": _system(F),
        "size": omega.size,
        "semicharacteristic": verdict(semi),
        "characteristic": verdict(char),
    }
    return out, 0 if char else 1


def cmd_centric(args) -> tuple[dict, int]:
    F = io.read_fusion(args.fusion)
    classes = nonextendable_classes(F)
    cm = centric_minimal(F)
    out = {
        "format": FORMAT,
        "system": _system(F),
        "centric_subgroups": [io.subgroup_json(P) for P in centric_subgroups(F)],
        "nonextendable_classes": [{"source": io.subgroup_json(c.source), "map": io.map_json(c.phi)} for c in classes],
        "centric_minimal": io.biset_json(cm),
    }
    code = 0
    try:
        trunc = truncate_centric(F, lambda_f(F))
        out["truncation_equal"] = trunc == cm
        code = 0 if trunc == cm else 1
    except StabilizationError as exc:
        out["stabilization"] = _stab_error(exc)
        code = 1
    return out, code


def cmd_knorm(args) -> tuple[dict, int]:
    F = io.read_fusion(args.fusion)
    P, K = io.read_k_spec(F, args.kspec)
    r = verify_k_normalizer_theorems(F, P, K)
    N = r.N
    id_label = repr(canonical_orbit_type(N, N.identity_map()))
    out = {
        "format": FORMAT,
        "system": _system(F),
        "P": io.subgroup_json(P),
        "K_order": len(K),
        "N": io.subgroup_json(N),
        "relation": r.relation,
        "fully_K_normalized": r.fully_k_normalized,
        "P_centric": r.centric,
        "subsystem_saturated": r.subsystem_saturated,
        "N_Lambda_K": io.biset_json(r.n_lambda),
        "Lambda_N": io.biset_json(r.lambda_n) if r.lambda_n is not None else None,
        "semicharacteristic": r.semicharacteristic,
        "characteristic": r.characteristic,
        "identity_orbits": r.id_orbits,
        "Lambda_N_copies": r.lambda_n_copies,
        "equal": r.equal,
        "one_copy_expected": r.one_copy_expected,
        "equality_expected": r.equality_expected,
        "orbit_bijection_with_K_Inn": r.inner_bijection,
        "consistent": r.consistent(),
        "notes": r.notes,
        "summary": f"{r.id_orbits} copies of {id_label} in N_Lambda^K(P)",
    }
    if args.conjecture:
        applies = r.fully_k_normalized and r.relation != "neither" and not r.centric
        out["conjecture"] = {"applies": applies, "equal": r.equal if applies else None}
    return out, 0 if r.consistent() else 1


def cmd_model(args) -> tuple[dict, int]:
    G = io.read_group(args.group)
    F = io.read_fusion(args.fusion)
    v = is_model(G, F)
    out = {
        "format": FORMAT,
        "system": _system(F),
        "group_order": G.order,
        "is_model": v.is_model,
        "p_reduced": v.p_reduced,
        "p_constrained": v.p_constrained,
        "sylow": v.sylow,
        "same_fusion": v.same_fusion,
        "notes": v.notes,
    }
    if not v:
        return out, 1
    t = verify_model_theorem(G, F)
    out["group_biset"] = io.biset_json(t.group_biset)
    out["lambda"] = io.biset_json(t.lambda_biset)
    out["group_biset_decomposition"] = {
        repr(P.labels()): c for P, c in decompose_biset(F, t.group_biset).items()
    }
    out["model_theorem"] = t.holds
    out["diff"] = [{"orbit": repr(k), "group": a, "lambda": b} for k, (a, b) in t.diff.items()]
    return out, 0 if t else 1


def cmd_saturated(args) -> tuple[dict, int]:
    F = io.read_fusion(args.fusion)
    v = is_saturated(F)
    out = {"format": FORMAT, "system": _system(F), "saturated": v.saturated, "morphisms": F.morphism_count()}
    if not v:
        out["axiom"] = v.axiom
        out["witness"] = io.subgroup_json(v.subgroup)
        out["morphism"] = io.map_json(v.morphism) if v.morphism is not None else None
        out["detail"] = v.detail
    nm = normalizer_map_check(F)
    out["normalizer_map_check"] = nm.holds
    return out, 0 if v else 1


def cmd_fixed_points(args) -> tuple[dict, int]:
    F = io.read_fusion(args.fusion)
    omega = io.read_biset(F, args.biset)
    probe = io.read_diagonal(F, args.diagonal)
    rows = []
    tf = tb = 0
    for t, c in omega.items():
        a = orbit_fixed_count(F.S, t, probe)
        b = brute_fixed_count(F.S, t, probe)
        tf += c * a
        tb += c * b
        rows.append({"orbit": repr(t), "mult": c, "formula": a, "brute_force": b})
    out = {"format": FORMAT, "system": _system(F), "orbits": rows, "formula_total": tf, "brute_force_total": tb}
    if tf != tb:
        raise InternalCheckFailed("fixed-point formula and brute force disagree")
    return out, 0


def cmd_examples(args) -> tuple[dict, int]:
    return {"format": FORMAT, "bundled": io.bundled_names()}, 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fusebiset", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, *positional, help=""):
        sp = sub.add_parser(name, help=help)
        for pos in positional:
            sp.add_argument(pos)
        sp.set_defaults(func=fn)
        return sp

    add("lambda", cmd_lambda, "fusion", help="minimal characteristic biset")
    sp = add("basis", cmd_basis, "fusion", help="basis of F-stable S-sets")
    sp.add_argument("--subgroup", nargs="+", metavar="ELEMENT", help="element labels of one subgroup")
    add("verify", cmd_verify, "fusion", "biset", help="(semi)characteristic verdicts for a biset")
    add("centric", cmd_centric, "fusion", help="centric subgroups and the centric minimal biset")
    sp = add("knorm", cmd_knorm, "fusion", "kspec", help="K-normalizer report")
    sp.add_argument("--conjecture", action="store_true", help="also report the equality check for non-centric P")
    add("model", cmd_model, "group", "fusion", help="model verdict and model theorem check")
    add("saturated", cmd_saturated, "fusion", help="saturation axioms with witness")
    add("fixed-points", cmd_fixed_points, "fusion", "biset", "diagonal", help="formula vs brute-force fixed points")
    add("examples", cmd_examples, help="list bundled example files")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            out, code = args.func(args)
    except CapExceeded as exc:
        print(json.dumps({"format": FORMAT, "error": "cap exceeded", "message": str(exc)}), file=sys.stderr)
        return 3
    except InternalCheckFailed as exc:
        print(json.dumps({"format": FORMAT, "error": "internal check failed", "message": str(exc)}), file=sys.stderr)
        return 4
    except (FusebisetError, NotAHomomorphism, NotInFusionSystem, NotStable, NotSemicharacteristic, ValueError, KeyError) as exc:
        print(json.dumps({"format": FORMAT, "error": "input error", "message": str(exc)}), file=sys.stderr)
        return 2
    sys.stdout.write(io.dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
