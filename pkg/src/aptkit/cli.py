"""Command-line interface: JSON in, canonical JSON out.

Exit codes: 0 on success (including a failed validation verdict, which is
a successful run), 1 on domain errors (structured ``{"error": ...}`` on
stdout), 2 on usage errors (argparse).  The default coefficient field is
Q, overridable with ``--field`` or the APTKIT_FIELD environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, cutoff, interleaving, io, toric
from . import barcodes as bc
from . import geometry as geo
from . import modules as md
from .errors import AptError, InvalidInput
from .modules import parse_field
from .rational import format_grade, parse_grade, qvec


def _load_json_arg(value):
    """Inline JSON if the argument looks like JSON, else a file path."""
    text = value
    if not value.lstrip().startswith(("{", "[")):
        with open(value, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON input: {exc}") from exc


def _load_fan(args):
    if getattr(args, "input", None):
        return io.parse_fan_json(_load_json_arg(args.input))
    if getattr(args, "catalog", None):
        return catalog.fan(args.catalog)
    raise InvalidInput("provide --input or --catalog")


def _load_cone(args, flag="cone"):
    cid = getattr(args, flag.replace("-", "_"), None)
    if getattr(args, "input", None):
        data = _load_json_arg(args.input)
        if cid is None and "generators" in data:
            return io.parse_cone_json(data)
        fan = io.parse_fan_json(data)
        if cid is None:
            raise InvalidInput(f"--{flag} is required with a fan input")
        return fan.cone_by_id(cid)
    if getattr(args, "catalog", None):
        fan = catalog.fan(args.catalog)
        if cid is None:
            raise InvalidInput(f"--{flag} is required with --catalog")
        return fan.cone_by_id(cid)
    raise InvalidInput("provide --input or --catalog")


def _load_barcode(args, which=1):
    inp = getattr(args, "input" if which == 1 else "input2", None)
    cat = getattr(args, "catalog" if which == 1 else "catalog2", None)
    if inp:
        return io.parse_barcode_json(_load_json_arg(inp))
    if cat:
        return catalog.barcode(cat)
    raise InvalidInput("provide --input/--catalog" + ("2" if which == 2 else ""))


def _load_presentation(args, field, which=1):
    inp = getattr(args, "input" if which == 1 else "input2", None)
    cat = getattr(args, "catalog" if which == 1 else "catalog2", None)
    if inp:
        return io.parse_presentation_json(_load_json_arg(inp), field)
    if cat:
        return catalog.presentation(cat, field)
    raise InvalidInput("provide --input/--catalog" + ("2" if which == 2 else ""))


def _load_polyhedron(args, flag="poly"):
    value = getattr(args, flag, None)
    if not value:
        raise InvalidInput(f"provide --{flag}")
    return io.parse_polyhedron_json(_load_json_arg(value))


def _point(args, dim=None):
    if getattr(args, "point", None) is None:
        raise InvalidInput("provide --point")
    coords = [s for s in args.point.split(",") if s.strip()]
    v = qvec(coords)
    if dim is not None and len(v) != dim:
        raise InvalidInput(f"point must have {dim} coordinates")
    return v


# ---------------------------------------------------------------- handlers


def _cmd_cone_dual(args, field):
    c = _load_cone(args)
    return io.cone_to_json(geo.dual_cone(c))


def _cmd_cone_proper(args, field):
    c = _load_cone(args)
    return {"proper": geo.is_proper(c)}


def _cmd_cone_faces(args, field):
    c = _load_cone(args)
    return {"faces": [io.cone_to_json(f) for f in geo.faces_of(c)]}


def _cmd_fan_validate(args, field):
    try:
        fan = _load_fan(args)
    except AptError as exc:
        if exc.code in ("improper-cone", "missing-face", "bad-intersection"):
            return {"valid": False, "violation": exc.as_report()}
        raise
    return {"valid": True, "complete": fan.is_complete()}


def _cmd_fan_complete(args, field):
    return {"complete": _load_fan(args).is_complete()}


def _cmd_fan_separate(args, field):
    fan = _load_fan(args)
    s1 = fan.cone_by_id(args.cone1)
    s2 = fan.cone_by_id(args.cone2)
    m = geo.separating_vector(s1, s2)
    return {"m": io.qvec_to_json(m)}


def _cmd_fan_support(args, field):
    fan = _load_fan(args)
    return {"contains": fan.support_contains(_point(args, fan.dim))}


def _cmd_barcode_eval(args, field):
    b = _load_barcode(args)
    dims = bc.eval_at(b, parse_grade(args.at))
    return {"dims": {str(k): v for k, v in sorted(dims.items())}}


def _cmd_barcode_shift(args, field):
    b = _load_barcode(args)
    return io.barcode_to_json(bc.shift(b, parse_grade(args.by)))


def _cmd_barcode_convolve(args, field):
    out = bc.convolve(_load_barcode(args, 1), _load_barcode(args, 2))
    return io.barcode_to_json(out)


def _cmd_barcode_almostize(args, field):
    return io.barcode_to_json(bc.almostize(_load_barcode(args)))


def _cmd_barcode_k0(args, field):
    return {"k0": io.k0_to_json(bc.k0_class(_load_barcode(args)))}


def _cmd_barcode_torsion(args, field):
    b = _load_barcode(args)
    return {"torsion": bc.is_c_torsion(b, parse_grade(args.scale))}


def _cmd_barcode_quotient_loc(args, field):
    return io.barcode_to_json(bc.quotient_by_locals(_load_barcode(args)))


def _cmd_barcode_homdim(args, field):
    dim = bc.torsionfree_hom_dim(_load_barcode(args, 1), _load_barcode(args, 2))
    return {"dim": dim}


def _cmd_dist_compute(args, field):
    x = _load_barcode(args, 1)
    y = _load_barcode(args, 2)
    d = interleaving.interleaving_distance(x, y)
    out = {"distance": format_grade(d)}
    if d != float("inf"):
        cert = interleaving.certificate_for(x, y, d)
        out["certificate"] = io.certificate_to_json(cert)
    return out


def _cmd_dist_verify(args, field):
    x = _load_barcode(args, 1)
    y = _load_barcode(args, 2)
    cert = io.parse_certificate_json(_load_json_arg(args.cert))
    return {"valid": interleaving.verify_interleaving(x, y, cert)}


def _cmd_cutoff_delta(args, field):
    fan = _load_fan(args)
    offsets = io.parse_offsets_json(_load_json_arg(args.offsets))
    return io.polyhedron_to_json(cutoff.delta_polytope(fan, offsets))


def _cmd_cutoff_mink(args, field):
    poly = _load_polyhedron(args)
    cone = _load_cone(args)
    return io.polyhedron_to_json(cutoff.minkowski_with_cone(poly, geo.dual_cone(cone)))


def _cmd_cutoff_basis_witness(args, field):
    poly = _load_polyhedron(args)
    gamma = _load_cone(args, flag="gamma")
    x = _point(args, poly.dim)
    a = cutoff.gamma_basis_witness(poly, x, gamma)
    return {"a": io.qvec_to_json(a)}


def _cmd_cutoff_star_homology(args, field):
    fan = _load_fan(args)
    report = cutoff.star_stalk_homology(fan, _point(args, fan.dim), field)
    return {
        "point": io.qvec_to_json(report.point),
        "betti": {str(k): v for k, v in sorted(report.betti.items())},
        "total_rank": report.total_rank(),
    }


def _cmd_cutoff_unit_check(args, field):
    fan = _load_fan(args)
    ok, checked = cutoff.convolution_unit_check(fan, field)
    return {"ok": ok, "strata_checked": checked}


def _cmd_cutoff_indicator_convolve(args, field):
    a = _load_polyhedron(args, "poly")
    b = _load_polyhedron(args, "poly2")
    poly, shift = cutoff.indicator_convolve(a, b)
    return {"polyhedron": io.polyhedron_to_json(poly), "shift": shift}


def _cmd_toric_charts(args, field):
    fan = _load_fan(args)
    charts = []
    transitions = []
    boundary = []
    for cid, cone in zip(fan.ids, fan.cones):
        chart = toric.chart_of_cone(cone)
        charts.append({"id": cid, "cone": io.cone_to_json(cone), "dual": io.cone_to_json(chart.dual)})
        content = toric.almost_content(chart)
        boundary.append({"id": cid, "idempotent": toric.boundary_idempotent_check(content)})
    for i, cid1 in enumerate(fan.ids):
        for cid2 in fan.ids:
            if cid1 == cid2:
                continue
            t = toric.transition_data(
                toric.chart_of_cone(fan.cone_by_id(cid1)),
                toric.chart_of_cone(fan.cone_by_id(cid2)),
            )
            transitions.append({"source": cid1, "target": cid2, "m": io.qvec_to_json(t.m)})
    return {"charts": charts, "transitions": transitions, "boundary": boundary}


def _cmd_toric_transition(args, field):
    fan = _load_fan(args)
    t = toric.transition_data(
        toric.chart_of_cone(fan.cone_by_id(args.cone1)),
        toric.chart_of_cone(fan.cone_by_id(args.cone2)),
    )
    return {"m": io.qvec_to_json(t.m), "overlap_dual": io.cone_to_json(t.overlap)}


def _cmd_toric_cocycle(args, field):
    fan = _load_fan(args)
    ok = toric.cocycle_check(
        toric.chart_of_cone(fan.cone_by_id(args.cone1)),
        toric.chart_of_cone(fan.cone_by_id(args.cone2)),
        toric.chart_of_cone(fan.cone_by_id(args.cone3)),
    )
    return {"ok": ok}


def _cmd_toric_boundary(args, field):
    fan = _load_fan(args)
    ids = [args.cone] if getattr(args, "cone", None) else list(fan.ids)
    out = []
    for cid in ids:
        content = toric.almost_content(toric.chart_of_cone(fan.cone_by_id(cid)))
        out.append({"id": cid, "idempotent": toric.boundary_idempotent_check(content)})
    return {"boundary": out}


def _cmd_toric_root_level(args, field):
    fan = _load_fan(args)
    chart = toric.chart_of_cone(fan.cone_by_id(args.cone))
    level = toric.root_ladder_level(chart, _point(args, fan.dim))
    return {"level": level}


def _cmd_module_eval(args, field):
    p = _load_presentation(args, field)
    coords = [s for s in args.at.split(",") if s.strip()]
    grade = qvec(coords)
    if len(grade) != p.dim:
        raise InvalidInput(f"grade must have {p.dim} coordinates")
    return {"dim": md.eval_at(p, grade)}


def _cmd_module_tensor(args, field):
    p = _load_presentation(args, field, 1)
    q_ = _load_presentation(args, field, 2)
    return io.presentation_to_json(md.h0_tensor(p, q_))


def _cmd_module_barcode(args, field):
    p = _load_presentation(args, field)
    return io.barcode_to_json(md.barcode_of_presentation(p))


def _cmd_module_present(args, field):
    b = _load_barcode(args)
    return io.presentation_to_json(md.presentation_of_barcode(b, field))


# ---------------------------------------------------------------- parser


def _add_common(p, *, second=False, poly=False, poly2=False, cert=False):
    p.add_argument("--field", default=None, help="coefficient field: q or f<p>")
    p.add_argument("--output", default=None, help="write JSON to file instead of stdout")
    p.add_argument("--input", help="JSON input (inline or file path)")
    p.add_argument("--catalog", help="catalog entry name")
    if second:
        p.add_argument("--input2", help="second JSON input")
        p.add_argument("--catalog2", help="second catalog entry name")
    if poly:
        p.add_argument("--poly", help="open polyhedron JSON (inline or file)")
    if poly2:
        p.add_argument("--poly2", help="second open polyhedron JSON")
    if cert:
        p.add_argument("--cert", required=True, help="certificate JSON (inline or file)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aptkit",
        description="Exact barcode / Novikov-module / fan toolkit",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    cone = groups.add_parser("cone").add_subparsers(dest="command", required=True)
    for name, fn in [("dual", _cmd_cone_dual), ("proper", _cmd_cone_proper), ("faces", _cmd_cone_faces)]:
        p = cone.add_parser(name)
        _add_common(p)
        p.add_argument("--cone", help="cone id within a fan input")
        p.set_defaults(handler=fn)

    fan = groups.add_parser("fan").add_subparsers(dest="command", required=True)
    for name, fn, extra in [
        ("validate", _cmd_fan_validate, ()),
        ("complete", _cmd_fan_complete, ()),
        ("separate", _cmd_fan_separate, ("cone1", "cone2")),
        ("support", _cmd_fan_support, ("point",)),
    ]:
        p = fan.add_parser(name)
        _add_common(p)
        for flag in extra:
            p.add_argument(f"--{flag}", required=True)
        p.set_defaults(handler=fn)

    barcode = groups.add_parser("barcode").add_subparsers(dest="command", required=True)
    for name, fn, extra, second in [
        ("eval", _cmd_barcode_eval, ("at",), False),
        ("shift", _cmd_barcode_shift, ("by",), False),
        ("convolve", _cmd_barcode_convolve, (), True),
        ("almostize", _cmd_barcode_almostize, (), False),
        ("k0", _cmd_barcode_k0, (), False),
        ("torsion", _cmd_barcode_torsion, ("scale",), False),
        ("quotient-loc", _cmd_barcode_quotient_loc, (), False),
        ("homdim", _cmd_barcode_homdim, (), True),
    ]:
        p = barcode.add_parser(name)
        _add_common(p, second=second)
        for flag in extra:
            p.add_argument(f"--{flag}", required=True)
        p.set_defaults(handler=fn)

    dist = groups.add_parser("dist").add_subparsers(dest="command", required=True)
    p = dist.add_parser("compute")
    _add_common(p, second=True)
    p.set_defaults(handler=_cmd_dist_compute)
    p = dist.add_parser("verify")
    _add_common(p, second=True, cert=True)
    p.set_defaults(handler=_cmd_dist_verify)

    cut = groups.add_parser("cutoff").add_subparsers(dest="command", required=True)
    p = cut.add_parser("delta")
    _add_common(p)
    p.add_argument("--offsets", required=True, help="ray-id to offset map (JSON)")
    p.set_defaults(handler=_cmd_cutoff_delta)
    p = cut.add_parser("mink")
    _add_common(p, poly=True)
    p.add_argument("--cone", required=True, help="fan cone id; its dual interior is added")
    p.set_defaults(handler=_cmd_cutoff_mink)
    p = cut.add_parser("basis-witness")
    _add_common(p, poly=True)
    p.add_argument("--gamma", help="cone id of gamma within the fan input")
    p.add_argument("--point", required=True)
    p.set_defaults(handler=_cmd_cutoff_basis_witness)
    p = cut.add_parser("star-homology")
    _add_common(p)
    p.add_argument("--point", required=True)
    p.set_defaults(handler=_cmd_cutoff_star_homology)
    p = cut.add_parser("unit-check")
    _add_common(p)
    p.set_defaults(handler=_cmd_cutoff_unit_check)
    p = cut.add_parser("indicator-convolve")
    _add_common(p, poly=True, poly2=True)
    p.set_defaults(handler=_cmd_cutoff_indicator_convolve)

    tor = groups.add_parser("toric").add_subparsers(dest="command", required=True)
    for name, fn, extra in [
        ("charts", _cmd_toric_charts, ()),
        ("transition", _cmd_toric_transition, ("cone1", "cone2")),
        ("cocycle", _cmd_toric_cocycle, ("cone1", "cone2", "cone3")),
        ("boundary", _cmd_toric_boundary, ()),
        ("root-level", _cmd_toric_root_level, ("cone", "point")),
    ]:
        p = tor.add_parser(name)
        _add_common(p)
        for flag in extra:
            p.add_argument(f"--{flag}", required=True)
        if name == "boundary":
            p.add_argument("--cone", help="restrict to one cone id")
        p.set_defaults(handler=fn)

    mod = groups.add_parser("module").add_subparsers(dest="command", required=True)
    for name, fn, extra, second in [
        ("eval", _cmd_module_eval, ("at",), False),
        ("tensor", _cmd_module_tensor, (), True),
        ("barcode", _cmd_module_barcode, (), False),
        ("present", _cmd_module_present, (), False),
    ]:
        p = mod.add_parser(name)
        _add_common(p, second=second)
        if name == "eval":
            p.add_argument("--at", required=True, help="comma-separated grade vector")
        p.set_defaults(handler=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    field_tag = args.field or os.environ.get("APTKIT_FIELD") or "q"
    try:
        field = parse_field(field_tag)
        result = args.handler(args, field)
    except AptError as exc:
        payload = io.dumps({"error": exc.as_report()})
        print(payload)
        return 1
    text = io.dumps(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
