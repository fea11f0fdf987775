"""JSON wire formats.

Rationals travel as strings ``"p/q"`` (plain integers are accepted on
input), grades additionally as ``"inf"`` / ``"-inf"``; nothing is ever
represented in floating point.  Serialization is canonical: keys sorted,
entries in library order, so identical values print identically.
"""

from __future__ import annotations

import json

from .barcodes import Bar, Barcode, DecoratedInterval
from .errors import InvalidInput
from .geometry import Cone, Fan, validate_fan
from .interleaving import InterleavingCertificate
from .k0 import K0Class
from .modules import PresentationND
from .polyhedra import OpenPolyhedron
from .rational import format_grade, parse_grade, q, qvec


def _require(cond, message):
    if not cond:
        raise InvalidInput(message)


def grade_to_json(g):
    return format_grade(g)


def qvec_to_json(v):
    return [str(x) for x in v]


def parse_qvec_json(data, dim=None):
    _require(isinstance(data, list), "expected a list of rationals")
    v = qvec(data)
    if dim is not None:
        _require(len(v) == dim, f"expected a vector of length {dim}")
    return v


def cone_to_json(c: Cone, cid=None) -> dict:
    out = {"dim": c.dim, "generators": [qvec_to_json(g) for g in c.generators]}
    if cid is not None:
        out["id"] = cid
    return out


def parse_cone_json(data) -> Cone:
    _require(isinstance(data, dict), "cone must be an object")
    _require("dim" in data and "generators" in data, "cone needs 'dim' and 'generators'")
    dim = int(data["dim"])
    gens = [parse_qvec_json(g, dim) for g in data["generators"]]
    return Cone(dim, gens)


def fan_to_json(f: Fan) -> dict:
    return {
        "dim": f.dim,
        "cones": [cone_to_json(c, cid) for cid, c in zip(f.ids, f.cones)],
    }


def parse_fan_json(data) -> Fan:
    _require(isinstance(data, dict), "fan must be an object")
    _require("dim" in data and "cones" in data, "fan needs 'dim' and 'cones'")
    dim = int(data["dim"])
    cones = []
    ids = []
    for i, entry in enumerate(data["cones"]):
        _require(isinstance(entry, dict), "fan cones must be objects")
        gens = [parse_qvec_json(g, dim) for g in entry.get("generators", [])]
        cones.append(Cone(dim, gens))
        ids.append(str(entry.get("id", f"c{i}")))
    return validate_fan(cones, ids)


def barcode_to_json(b: Barcode) -> dict:
    bars = []
    for item in b.bars:
        iv = item.interval
        bars.append(
            {
                "birth": grade_to_json(iv.left),
                "death": grade_to_json(iv.right),
                "birth_closed": iv.left_closed,
                "death_closed": iv.right_closed,
                "degree": item.hdegree,
                "multiplicity": item.multiplicity,
            }
        )
    return {"bars": bars}


def parse_barcode_json(data) -> Barcode:
    _require(isinstance(data, dict) and "bars" in data, "barcode needs a 'bars' list")
    bars = []
    for entry in data["bars"]:
        birth = parse_grade(entry["birth"])
        death = parse_grade(entry["death"])
        bars.append(
            Bar(
                DecoratedInterval(
                    birth,
                    death,
                    bool(entry.get("birth_closed", birth != float("-inf"))),
                    bool(entry.get("death_closed", False)),
                ),
                int(entry.get("degree", 0)),
                int(entry.get("multiplicity", 1)),
            )
        )
    return Barcode(bars)


def presentation_to_json(p: PresentationND) -> dict:
    return {
        "gamma": cone_to_json(p.gamma),
        "generators": [qvec_to_json(g) for g in p.generators],
        "relations": [
            {"degree": qvec_to_json(d), "coeffs": [str(c) for c in coeffs]}
            for d, coeffs in p.relations
        ],
    }


def parse_presentation_json(data, field=None) -> PresentationND:
    _require(isinstance(data, dict), "presentation must be an object")
    _require("gamma" in data and "generators" in data, "presentation needs 'gamma' and 'generators'")
    gamma = parse_cone_json(data["gamma"])
    gens = [parse_qvec_json(g, gamma.dim) for g in data["generators"]]
    rels = []
    for entry in data.get("relations", []):
        degree = parse_qvec_json(entry["degree"], gamma.dim)
        coeffs = [q(c) for c in entry["coeffs"]]
        rels.append((degree, coeffs))
    return PresentationND(gamma, gens, rels, field)


def polyhedron_to_json(p: OpenPolyhedron) -> dict:
    if p.is_empty:
        return {"dim": p.dim, "empty": True, "constraints": []}
    return {
        "dim": p.dim,
        "empty": False,
        "constraints": [
            {"normal": qvec_to_json(n), "offset": str(d)} for n, d in p.constraints
        ],
    }


def parse_polyhedron_json(data) -> OpenPolyhedron:
    _require(isinstance(data, dict) and "dim" in data, "polyhedron needs 'dim'")
    dim = int(data["dim"])
    if data.get("empty"):
        return OpenPolyhedron.empty(dim)
    cons = []
    for entry in data.get("constraints", []):
        cons.append((parse_qvec_json(entry["normal"], dim), q(entry["offset"])))
    return OpenPolyhedron(dim, cons)


def k0_to_json(k: K0Class) -> list:
    return [{"grade": str(g), "coef": c} for g, c in k.terms]


def parse_k0_json(data) -> K0Class:
    _require(isinstance(data, list), "K0 classes are lists of {grade, coef} terms")
    return K0Class([(q(entry["grade"]), int(entry["coef"])) for entry in data])


def parse_offsets_json(data) -> dict:
    _require(isinstance(data, dict), "offsets must map ray ids to rationals or 'inf'")
    return {str(k): parse_grade(v) for k, v in data.items()}


def offsets_to_json(offsets) -> dict:
    return {str(k): format_grade(v) for k, v in offsets.items()}


def certificate_to_json(cert: InterleavingCertificate) -> dict:
    return {
        "a": grade_to_json(cert.a),
        "b": grade_to_json(cert.b),
        "forward": list(cert.forward),
        "backward": list(cert.backward),
    }


def parse_certificate_json(data) -> InterleavingCertificate:
    _require(isinstance(data, dict), "certificate must be an object")
    fwd = tuple(None if j is None else int(j) for j in data.get("forward", []))
    bwd = tuple(None if j is None else int(j) for j in data.get("backward", []))
    return InterleavingCertificate(parse_grade(data["a"]), parse_grade(data["b"]), fwd, bwd)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "), indent=None)
