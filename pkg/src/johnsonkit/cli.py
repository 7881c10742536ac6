"""Command-line front end; every command prints one JSON document.

Exit status is 0 on success, 1 for a structured error from the library and
2 when the input cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import johnson as jn
from . import library as lib
from . import orbits
from .errors import JohnsonKitError, ParseError
from .lieweighted import filtration_degree, lcs_class
from .surface import PartitionedSurface, build_model


class InputError(Exception):
    """Malformed input (bad JSON, missing keys, unreadable file)."""


# --- input helpers -----------------------------------------------------------------

def _blocks(text):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise InputError(f"bad block list {text!r}") from exc


def _surface(args):
    if getattr(args, "surface", None):
        data = _json(args.surface)
        return PartitionedSurface.from_json(data)
    return PartitionedSurface(args.genus, tuple(_blocks(args.blocks)))


def _json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}") from exc


def _read_file(path):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    return _json(text)


def _mapping_class(args):
    data = _read_file(args.file)
    try:
        return jn.mapping_class_from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"mapping class JSON is missing {exc}") from exc


def _welement(args):
    """A W element from a file holding either a mapping class or a W element."""
    data = _read_file(args.file)
    try:
        if "images" in data:
            return jn.tau_w(jn.mapping_class_from_json(data))
        return jn.WElement.from_json(build_model(data["surface"]), data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"W element JSON is missing {exc}") from exc


# --- output helpers ------------------------------------------------------------------

def conventions(M, K):
    return {"basis": list(M.h_names), "boundary_letters": list(M.z_names),
            "omega": "omega(x2r-1, x2r) = omega(a, b) = +1", "truncation": K}


def n_json(M, c):
    return {"wedge": [[M.h_names[u], M.h_names[v], k] for (u, v), k in sorted(c.wedge.items()) if k],
            "z": list(c.z)}


def hom_json(f):
    M = f.model
    return {M.h_names[t]: n_json(M, col) for t, col in enumerate(f.columns)}


def lie_json(x):
    return orbits.lie_json(x)


def _envelope(command, M, K, inputs, result):
    out = {"command": command, "input": inputs}
    if M is not None:
        out["conventions"] = conventions(M, K)
    out.update(result)
    return out


# --- commands ------------------------------------------------------------------------

def cmd_surface_info(args):
    ps = _surface(args)
    M = build_model(ps)
    return _envelope("surface info", M, args.degree, {"surface": ps.to_json()}, M.describe())


def cmd_lcs_class(args):
    ps = _surface(args)
    M = build_model(ps)
    w = M.word(args.word)
    inputs = {"surface": ps.to_json(), "word": str(w)}
    if args.at is not None:
        return _envelope("lcs-class", M, args.degree, inputs,
                         {"degree": args.at, "class": lie_json(lcs_class(w, args.at))})
    d = filtration_degree(w, args.degree)
    if d == 0 or d > args.degree:
        return _envelope("lcs-class", M, args.degree, inputs,
                         {"degree": None, "beyond_truncation": d != 0, "identity": d == 0, "class": None})
    return _envelope("lcs-class", M, args.degree, inputs, {"degree": d, "class": lie_json(lcs_class(w, d))})


def cmd_tau(args):
    m = _mapping_class(args)
    f = jn.tau(m)
    ok, failed = jn.in_W(f)
    result = {"tau": hom_json(f), "in_W": ok}
    if ok:
        result["welement"] = jn.to_welement(f).to_json()
    else:
        result["failed_condition"] = failed
    return _envelope("tau", m.model, args.degree, jn.mapping_class_to_json(m), result)


def cmd_w_check(args):
    w = _welement(args)
    ok, failed = jn.in_W(w.hom())
    return _envelope("w-check", w.model, args.degree, w.to_json(), {"in_W": ok, "failed_condition": failed})


def cmd_delta(args):
    m = _mapping_class(args)
    f = jn.tau(m)
    result = {"block": args.block, "delta": jn.delta(f, args.block)}
    if m.arc_images is not None:
        result["arc_class"] = jn.d_arc(m, args.block)
        result["agree"] = result["arc_class"] == result["delta"]
    return _envelope("delta", m.model, args.degree, jn.mapping_class_to_json(m), result)


def cmd_push(args):
    w = _welement(args)
    M = w.model
    if args.cap is not None:
        gl = jn.capping(M, args.cap)
        how = {"cap": args.cap}
    else:
        spec = _json(args.glue)
        try:
            pieces = {int(i): jn.Piece(int(p["genus"]), int(p["boundaries"])) for i, p in spec.items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad gluing spec: {exc}") from exc
        gl = jn.glue(M, pieces)
        how = {"glue": {str(i): {"genus": p.genus, "boundaries": p.boundaries} for i, p in sorted(pieces.items())}}
    out = jn.pushforward(w, gl)
    T = gl.target
    return _envelope("push", M, args.degree, {"welement": w.to_json(), **how},
                     {"target": {"basis": list(T.h_names), "boundary_letters": list(T.z_names),
                                 "boundary_word": str(T.boundary_word)},
                      "welement": out.to_json()})


def cmd_basepoint(args):
    w = _welement(args)
    out = jn.basepoint_change(w, args.block)
    return _envelope("basepoint", w.model, args.degree, {"welement": w.to_json(), "block": args.block},
                     {"welement": out.to_json()})


def cmd_orbit(args):
    kind = orbits.NONSEPARATING if args.kind == "nonsep" else orbits.SEPARATING
    p = orbits.CurvePair.parse(args.genus, args.gamma, args.delta, kind)
    v = orbits.nonsep_equivalent(p) if args.kind == "nonsep" else orbits.sep_equivalent(p)
    M = orbits.closed_model(args.genus)
    return _envelope(f"orbit {args.kind}", M, args.degree,
                     {"genus": args.genus, "gamma": str(p.gamma), "delta": str(p.delta)}, v.to_json())


def cmd_filtration(args):
    m = _mapping_class(args)
    levels = [args.level] if args.level is not None else list(range(1, args.degree + 1))
    member = {str(k): jn.filtration_member(m, k, args.degree) for k in levels}
    return _envelope("filtration", m.model, args.degree, jn.mapping_class_to_json(m), {"member": member})


def cmd_betti(args):
    rank = orbits.betti(args.genus, args.boundary, args.blocks)
    return _envelope("betti", None, args.degree,
                     {"genus": args.genus, "boundary": args.boundary, "blocks": args.blocks},
                     {"rank": rank, "genus_ge_3": args.genus >= 3})


def cmd_gen(args):
    kind = args.kind
    if kind == "bp":
        m = lib.bounding_pair_std()
    elif kind == "lantern":
        m = lib.lantern_core_std()
    else:
        M = build_model(_surface(args))
        if kind == "twist":
            m = lib.sep_twist(M, args.handles)
        else:
            if args.loop is None or args.block is None:
                raise InputError("push needs --loop and --block")
            m = lib.disk_push(M, args.loop, args.block)
    return jn.mapping_class_to_json(m)


# --- parser ---------------------------------------------------------------------------

def _surface_args(p, required=True):
    p.add_argument("--genus", type=int, default=None if required else 0, required=required)
    p.add_argument("--blocks", default="1", help="block sizes, basepoint block first, e.g. 1,2")
    p.add_argument("--surface", help='surface JSON, e.g. {"genus": 1, "blocks": [1, 2]}')


def build_parser():
    top = argparse.ArgumentParser(prog="johnsonkit", description=__doc__.splitlines()[0])
    top.add_argument("--degree", type=int, default=jn.DEFAULT_TRUNCATION, help="truncation degree K")
    top.add_argument("--json", action="store_true", help="compact machine output")
    sub = top.add_subparsers(dest="command", required=True)

    surf = sub.add_parser("surface").add_subparsers(dest="what", required=True)
    p = surf.add_parser("info")
    _surface_args(p, required=False)
    p.set_defaults(run=cmd_surface_info)

    p = sub.add_parser("lcs-class")
    _surface_args(p, required=False)
    p.add_argument("--word", required=True)
    p.add_argument("--at", type=int, help="report the class in this graded piece")
    p.set_defaults(run=cmd_lcs_class)

    for name, fn in (("tau", cmd_tau), ("w-check", cmd_w_check)):
        p = sub.add_parser(name)
        p.add_argument("--file", required=True)
        p.set_defaults(run=fn)

    p = sub.add_parser("delta")
    p.add_argument("--file", required=True)
    p.add_argument("--block", type=int, required=True)
    p.set_defaults(run=cmd_delta)

    p = sub.add_parser("push")
    p.add_argument("--file", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cap", type=int)
    g.add_argument("--glue", help='pieces per boundary letter, e.g. {"1": {"genus": 1, "boundaries": 0}}')
    p.set_defaults(run=cmd_push)

    p = sub.add_parser("basepoint")
    p.add_argument("--file", required=True)
    p.add_argument("--block", type=int, required=True)
    p.set_defaults(run=cmd_basepoint)

    orb = sub.add_parser("orbit").add_subparsers(dest="kind", required=True)
    for kind in ("nonsep", "sep"):
        p = orb.add_parser(kind)
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--gamma", required=True)
        p.add_argument("--delta", required=True)
        p.set_defaults(run=cmd_orbit)

    p = sub.add_parser("filtration")
    p.add_argument("--file", required=True)
    p.add_argument("--level", type=int)
    p.set_defaults(run=cmd_filtration)

    p = sub.add_parser("betti")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--boundary", type=int, required=True)
    p.add_argument("--blocks", type=int, required=True)
    p.set_defaults(run=cmd_betti)

    p = sub.add_parser("gen")
    p.add_argument("kind", choices=["twist", "bp", "lantern", "push"])
    _surface_args(p, required=False)
    p.add_argument("--handles", type=int, default=1)
    p.add_argument("--loop")
    p.add_argument("--block", type=int)
    p.set_defaults(run=cmd_gen)
    return top


def _emit(obj, compact, stream=None):
    stream = stream or sys.stdout
    if compact:
        stream.write(json.dumps(obj, separators=(",", ":")) + "\n")
    else:
        stream.write(json.dumps(obj, indent=2) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad flags
    compact = args.json or not sys.stdout.isatty()
    try:
        result = args.run(args)
    except (InputError, ParseError) as exc:
        _emit({"error": {"kind": "ParseError", "detail": str(exc)}}, compact)
        return 2
    except JohnsonKitError as exc:
        _emit({"error": {"kind": exc.kind, "detail": str(exc.detail)}}, compact)
        return 1
    _emit(result, compact)
    return 0


if __name__ == "__main__":
    sys.exit(main())
