"""Command-line front end.

Subcommands wire the library together over catalog keys (``catalog:S3:std``)
or JSON files carrying a group and a representation.  All output is JSON with
a schema marker, the seed and tolerance echoed, and deterministic ordering,
so repeated runs are byte-identical.
"""

import argparse
import json
import sys

import numpy as np

from . import catalog as cat
from ._linalg import RANK_TOL
from .algebras import center, centralizer
from .classify import enumerate_invariant_subalgebras, verify_classification
from .errors import (CapExceeded, InfiniteLattice, InvalgError,
                     NotARepresentation)
from .factor import (central_simple_invariant_subalgebras, cocycle_consistency,
                     extract_factorization)
from .ideals import Parametrization, invariant_ideals, invariant_subspaces
from .lie import HighestWeight, etingof_enumerate, parse_product_type
from .reps import is_irreducible, validate

SCHEMA = 1


def _complex_json(arr, ndigits=12):
    arr = np.asarray(arr, dtype=complex)
    out = np.empty(arr.shape + (2,))
    out[..., 0] = np.round(arr.real, ndigits) + 0.0
    out[..., 1] = np.round(arr.imag, ndigits) + 0.0
    return out.tolist()


def _base_payload(args):
    return {"schema": SCHEMA, "seed": args.seed, "tol": args.tol}


def cmd_validate(args):
    group, rep = cat.load_input(args.input)
    payload = _base_payload(args)
    payload.update({
        "command": "validate",
        "input": args.input,
        "group_order": group.order,
        "dim": rep.dim,
        "projective": rep.is_projective,
    })
    try:
        report = validate(rep, tol=args.tol)
    except NotARepresentation as exc:
        payload["valid"] = False
        payload["reason"] = str(exc)
        if exc.worst_pair is not None:
            payload["worst_pair"] = list(exc.worst_pair)
        return payload, 1
    payload["valid"] = True
    payload["max_deviation"] = float(report.max_deviation)
    payload["unitary_deviation"] = float(report.unitary_deviation)
    payload["irreducible"] = bool(is_irreducible(rep))
    return payload, 0


def _subspace_json(sub):
    return {"dim": sub.dim, "ambient": sub.ambient,
            "basis_columns": _complex_json(sub.basis)}


def cmd_ideals(args):
    group, rep = cat.load_input(args.input)
    payload = _base_payload(args)
    payload.update({"command": "ideals", "input": args.input, "dim": rep.dim})
    subs = invariant_subspaces(rep, seed=args.seed, tol=args.tol)
    if isinstance(subs, Parametrization):
        payload["infinite"] = True
        payload["parametrization"] = [
            {"irrep": lbl, "multiplicity": m, "dim": d}
            for lbl, m, d in subs.factors]
        return payload, 0
    payload["infinite"] = False
    payload["subspaces"] = [_subspace_json(s) for s in subs]
    out = {}
    for side in ("left", "right"):
        ideals = invariant_ideals(rep, side, seed=args.seed, tol=args.tol)
        out[side] = [{
            "side": ideal.side,
            "dim": ideal.dim,
            "source": _subspace_json(ideal.source),
            "basis": _complex_json(np.stack(ideal.space.basis())
                                   if ideal.dim else np.zeros((0, rep.dim, rep.dim))),
        } for ideal in ideals]
    payload["ideals"] = out
    payload["counts"] = {side: len(out[side]) for side in out}
    return payload, 0


def cmd_subalgebras(args):
    group, rep = cat.load_input(args.input)
    payload = _base_payload(args)
    payload.update({"command": "subalgebras", "input": args.input,
                    "dim": rep.dim})
    subs, complete = enumerate_invariant_subalgebras(rep, seed=args.seed,
                                                     tol=args.tol)
    report = verify_classification(subs, rep, seed=args.seed, tol=args.tol)
    items = []
    for s in subs:
        datum = s.induction_datum
        simple = s.num_components == 1
        items.append({
            "dim": s.space.dim,
            "component_dims": list(s.component_dims),
            "multiplicities": list(s.multiplicities),
            "unital": bool(s.unital),
            "simple": simple,
            "central_simple": bool(simple and center(s.space, args.tol).dim == 1),
            "basis": _complex_json(np.stack(s.space.basis())),
            "datum": {
                "subgroup_order": datum.pair.subgroup.order,
                "subgroup_members": list(map(int, datum.pair.subgroup.members)),
                "w_dim": datum.pair.w_rep.dim,
                "quad": list(datum.quad) if datum.quad else None,
            },
        })
    payload["subalgebras"] = items
    payload["count"] = len(items)
    payload["complete"] = bool(complete)
    payload["verification"] = {"ok": report.ok,
                               "violations": list(report.violations)}
    return payload, 0


def cmd_factor(args):
    group, rep = cat.load_input(args.input)
    payload = _base_payload(args)
    payload.update({"command": "factor", "input": args.input, "dim": rep.dim})
    if not is_irreducible(rep):
        raise ValueError("factorization expects an irreducible representation")
    cs_list, certified = central_simple_invariant_subalgebras(
        rep, seed=args.seed, tol=args.tol)
    items = []
    for sp in cs_list:
        fact = extract_factorization(sp, rep, seed=args.seed, tol=args.tol)
        items.append({
            "subalgebra_dim": sp.dim,
            "a": fact.a,
            "b": fact.b,
            "residual": float(round(fact.residual, 12)),
            "cocycle_deviation": float(round(cocycle_consistency(fact, rep), 12)),
            "sigma": {
                "matrices": _complex_json(fact.sigma.matrices),
                "projective": fact.sigma.is_projective,
            },
            "tau": {
                "matrices": _complex_json(fact.tau.matrices),
                "projective": fact.tau.is_projective,
            },
            "lambdas": _complex_json(fact.lambdas),
            "basis_change": _complex_json(fact.basis_change),
        })
    payload["certified"] = bool(certified)
    payload["factorizations"] = items
    return payload, 0


def cmd_lie(args):
    payload = {"schema": SCHEMA, "command": "lie", "type": args.type,
               "weights": args.weights}
    systems = parse_product_type(args.type)
    weight_lists = [json.loads(part) for part in args.weights.split(";")]
    if len(weight_lists) != len(systems):
        raise ValueError(
            f"{len(systems)} factors but {len(weight_lists)} weight lists")
    factors = [(s, HighestWeight(s, tuple(w)))
               for s, w in zip(systems, weight_lists)]
    cls = etingof_enumerate(factors)
    payload["factor_dims"] = list(cls.factor_dims)
    payload["nonzero_indices"] = list(cls.nonzero_indices)
    payload["count"] = cls.count
    payload["total_dim"] = cls.total_dim
    payload["entries"] = [{"subset": list(e.subset), "dim": e.dim,
                           "factor_dims": list(e.factor_dims)}
                          for e in cls.entries]
    payload["includes_zero_algebra"] = cls.includes_zero
    return payload, 0


def cmd_catalog(args):
    payload = {"schema": SCHEMA, "command": "catalog"}
    entries = []
    for key, entry in sorted(cat.catalog().items()):
        entries.append({
            "key": key,
            "order": entry.group.order,
            "note": entry.note,
            "reps": {name: {"dim": rep.dim,
                            "projective": rep.is_projective}
                     for name, rep in sorted(entry.reps.items())},
        })
    payload["entries"] = entries
    return payload, 0


def _parser():
    p = argparse.ArgumentParser(
        prog="invalg",
        description="invariant ideals and subalgebras of matrix algebras "
                    "under finite group actions")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, with_input=True):
        if with_input:
            sp.add_argument("input",
                            help="catalog:KEY:REP or a JSON file path")
        sp.add_argument("--tol", type=float, default=RANK_TOL)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", default=None,
                        help="write JSON here instead of stdout")

    sp = sub.add_parser("validate", help="check the representation axioms")
    add_common(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("ideals", help="invariant subspaces and one-sided ideals")
    add_common(sp)
    sp.set_defaults(func=cmd_ideals)

    sp = sub.add_parser("subalgebras", help="enumerate invariant subalgebras")
    add_common(sp)
    sp.set_defaults(func=cmd_subalgebras)

    sp = sub.add_parser("factor", help="dual pairs and tensor factorizations")
    add_common(sp)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("lie", help="compact-group power-set classification")
    sp.add_argument("--type", required=True, help="product type, e.g. A1xA1")
    sp.add_argument("--weights", required=True,
                    help="semicolon-separated weight lists, e.g. \"[1];[1]\"")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_lie)

    sp = sub.add_parser("catalog", help="list built-in groups and reps")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_catalog)

    return p


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        payload, code = args.func(args)
    except CapExceeded as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return 2
    except (InvalgError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
