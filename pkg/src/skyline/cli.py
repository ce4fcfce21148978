"""Command line entry point.

Exit status is 0 on success, 1 when a verification finds a divergence and 2
on malformed input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import bruhat, crystal, growth, kernel, keypairs, polynomial, rsk
from .core import Biword, NearStaircase, biwords_on_cells
from .ssaf import NotInImage

OK, DIVERGED, MALFORMED = 0, 1, 2


class InputError(ValueError):
    pass


def parse_tuple(text: str) -> tuple[int, ...]:
    """``(0,1,2)``, ``[0,1,2]``, ``0,1,2`` or, for single digits, ``012``."""
    body = text.strip().strip("()[]").strip()
    if not body:
        return ()
    if re.fullmatch(r"\d+", body) and "," not in text:
        return tuple(int(c) for c in body)
    try:
        return tuple(int(v) for v in re.split(r"[,\s]+", body) if v)
    except ValueError as exc:
        raise InputError(f"cannot read integer sequence from {text!r}") from exc


def fmt(seq) -> str:
    return "(" + ",".join(map(str, seq)) + ")"


def load_json(spec: str):
    path = Path(spec)
    try:
        if path.exists():
            return json.loads(path.read_text())
        return json.loads(spec)
    except json.JSONDecodeError as exc:
        raise InputError(f"{spec}: not valid JSON ({exc})") from exc


def load_biword(spec: str) -> tuple[Biword, int]:
    data = load_json(spec)
    if isinstance(data, dict) and "biword" in data:
        data = {**data["biword"], "n": data.get("n", data["biword"].get("n"))}
    try:
        w = Biword.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError("biword JSON needs 'top' and 'bottom' arrays") from exc
    n = int(data.get("n") or w.alphabet_size() or 1)
    if w.alphabet_size() > n:
        raise InputError(f"biword uses letters beyond n={n}")
    return w, n


def load_shape(spec: str) -> NearStaircase:
    data = load_json(spec)
    try:
        return NearStaircase.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError("shape JSON needs {n, nw, se}") from exc


def emit(args, payload: dict, text: str):
    if getattr(args, "output", "text") == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_phi(args) -> int:
    if args.inverse:
        pair = rsk.SsafPair.from_json(load_json(args.input))
        w = rsk.phi_inverse(pair)
        emit(args, w.to_json(), str(w))
        return OK
    w, n = load_biword(args.input)
    pair = rsk.phi(w, n)
    F, G = pair.insertion, pair.recording
    text = [f"sh(F)={fmt(F.shape)}", f"sh(G)={fmt(G.shape)}"]
    if args.render:
        text += ["F:", F.render(), "G:", G.render()]
    emit(args, {"n": n, **pair.to_json(), "shapes": [list(F.shape), list(G.shape)]}, "\n".join(text))
    return OK


def cmd_growth(args) -> int:
    w, n = load_biword(args.input)
    g = growth.growth_diagram(w, n)
    label = growth.label_str
    left = [label(p) for p in g.left_labels()]
    bottom = [label(p) for p in g.bottom_labels()]
    text = [f"left:   {' '.join(left)}", f"bottom: {' '.join(bottom)}"]
    pair = growth.phi_by_growth(w, n)
    text += [f"sh(F)={fmt(pair.insertion.shape)}", f"sh(G)={fmt(pair.recording.shape)}"]
    if args.render:
        text.append(g.render())
    emit(args, {"left": left, "bottom": bottom, **pair.to_json()}, "\n".join(text))
    return OK


def cmd_crystal(args) -> int:
    if args.op in ("e", "f"):
        op = crystal.e_op if args.op == "e" else crystal.f_op
        word = parse_tuple(args.word)
        for _ in range(args.power):
            if word is None:
                break
            word = op(args.r, word)
        text = "undefined" if word is None else "".join(map(str, word)) if max(word, default=0) < 10 \
            else ",".join(map(str, word))
        emit(args, {"word": None if word is None else list(word)}, text)
        return OK
    if args.op == "upsilon":
        w, n = load_biword(args.word)
        out = crystal.upsilon_star(args.r, w) if args.star else crystal.upsilon(args.r, w)
        emit(args, out.to_json(), str(out))
        return OK
    raise InputError(f"unknown crystal operation {args.op}")


def cmd_check_corner(args) -> int:
    lam = parse_tuple(args.shape)
    w, n = load_biword(args.biword)
    n = max(n, len(lam), max(lam, default=0))
    report = crystal.check_corner_theorem(lam, args.r, w, n)
    lines = [f"precondition: {report.precondition}"] + [
        f"({c}) {getattr(report, 'clause_' + c)}" for c in "abcd"
    ] + report.notes
    emit(args, report.to_json(), "\n".join(lines))
    return OK if report.ok or not report.precondition else DIVERGED


def cmd_bruhat(args) -> int:
    if args.op == "leq":
        if len(args.values) != 2:
            raise InputError("bruhat leq needs two compositions")
        a, b = (parse_tuple(v) for v in args.values)
        result = bruhat.bruhat_leq(a, b)
        emit(args, {"leq": result}, "true" if result else "false")
        return OK
    if args.op == "orbit":
        if len(args.values) != 1:
            raise InputError("bruhat orbit needs one partition")
        poset = bruhat.orbit_poset(parse_tuple(args.values[0]))
        edges = [f"{fmt(a)} {fmt(b)}" for a, b in poset.covering]
        emit(args, {"covers": [[list(a), list(b)] for a, b in poset.covering]}, "\n".join(edges))
        return OK
    raise InputError(f"unknown bruhat operation {args.op}")


def cmd_poly(args) -> int:
    nu = parse_tuple(args.nu)
    if args.kind == "key":
        f = polynomial.key_polynomial_operator(nu) if args.operator else polynomial.key_polynomial(nu)
    else:
        f = polynomial.atom_operator(nu) if args.operator else polynomial.atom_polynomial(nu)
    emit(args, {"terms": f.to_json()}, str(f))
    return OK


def cmd_keypair(args) -> int:
    w, n = load_biword(args.input)
    nu, beta = keypairs.key_pair_of(w, n)
    payload = {"nu": list(nu), "beta": list(beta)}
    lines = [f"key-pair: {fmt(nu)} {fmt(beta)}"]
    if args.shape:
        shape = load_shape(args.shape)
        cls = keypairs.classify_biword(w, shape)
        cond = keypairs.nw_se_condition_b(nu, beta, shape)
        payload.update({"class": str(cls), "condition": cond})
        lines += [f"support: {cls}", f"layer condition: {cond}"]
    emit(args, payload, "\n".join(lines))
    return OK


def bijection_table(shape: NearStaircase, max_mult: int) -> dict:
    """Per support class: biword count, how many satisfy the full layer test, mismatches."""
    target = keypairs.SupportClass("layer", shape.nw, shape.se) if shape.k else \
        keypairs.SupportClass("staircase")
    rows: dict = {}
    for w in biwords_on_cells(shape.cells(), max_mult):
        cls = keypairs.classify_biword(w, shape)
        nu, beta = keypairs.key_pair_of(w, shape.n)
        cond = keypairs.nw_se_condition_b(nu, beta, shape)
        row = rows.setdefault(str(cls), {"biwords": 0, "condition": 0, "mismatches": 0})
        row["biwords"] += 1
        row["condition"] += cond
        row["mismatches"] += cond != (cls == target)
    return rows


def cmd_check_bijection(args) -> int:
    shape = load_shape(args.shape)
    rows = bijection_table(shape, args.max_mult)
    lines = [f"{'class':<32} {'biwords':>8} {'condition':>10} {'mismatches':>11}"]
    for name in sorted(rows):
        r = rows[name]
        lines.append(f"{name:<32} {r['biwords']:>8} {r['condition']:>10} {r['mismatches']:>11}")
    bad = sum(r["mismatches"] for r in rows.values())
    lines.append("PASS" if bad == 0 else f"FAIL ({bad} mismatches)")
    emit(args, {"shape": shape.to_json(), "maxMult": args.max_mult, "classes": rows, "ok": bad == 0},
         "\n".join(lines))
    return OK if bad == 0 else DIVERGED


def _variants(choice: str) -> tuple[str, ...]:
    return kernel.VARIANTS if choice == "all" else (choice,)


def run_verify(shape: NearStaircase, degree: int, variant: str, threads: int):
    return kernel.verify_expansion(shape, degree, _variants(variant), threads)


def cmd_verify(args) -> int:
    shape = load_shape(args.shape)
    report = run_verify(shape, args.degree, args.variant, args.threads)
    if args.report:
        Path(args.report).write_text(json.dumps(report.to_json(), sort_keys=True, indent=1) + "\n")
    lines = [f"shape {shape.to_json()} D={args.degree}"]
    for side, p in report.sides.items():
        lines.append(f"  {side:<20} {len(p):>6} terms")
    e = report.enumeration
    lines.append(f"  A-set pairs {e.tagged}, overlaps {e.overlaps}, biword mismatches {e.biword_mismatches}")
    if report.ok:
        lines.append("PASS")
    else:
        lines.append(f"FAIL first divergence {report.first_divergence}")
    # timings only go to the report file so that stdout stays reproducible
    payload = report.to_json(with_polynomials=False)
    del payload["timings"]
    emit(args, payload, "\n".join(lines))
    return OK if report.ok else DIVERGED


def cmd_batch(args) -> int:
    config = load_json(args.config)
    jobs = config.get("jobs", config) if isinstance(config, dict) else config
    status = OK
    base = Path(args.config).parent if Path(args.config).exists() else Path(".")
    for job in jobs:
        kind = job.get("run", "verify")
        shape_spec = job["shape"]
        if isinstance(shape_spec, str) and not Path(shape_spec).exists():
            shape_spec = str(base / shape_spec)
        shape = NearStaircase.from_json(shape_spec) if isinstance(shape_spec, dict) else load_shape(shape_spec)
        if kind == "verify":
            report = run_verify(shape, int(job["degree"]), job.get("variant", "all"), args.threads)
            ok = report.ok
        elif kind == "check-bijection":
            rows = bijection_table(shape, int(job["max_mult"]))
            ok = all(r["mismatches"] == 0 for r in rows.values())
        else:
            raise InputError(f"unknown batch job {kind!r}")
        print(f"{'PASS' if ok else 'FAIL'} {kind} {shape.to_json()}")
        if not ok:
            status = DIVERGED
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skyline", description=__doc__.splitlines()[0])
    parser.add_argument("--output", choices=["text", "json"], default="text")
    # lets --output also follow the subcommand without clobbering the default
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["text", "json"], default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="RSK analogue on a biword", parents=[common])
    p.add_argument("input", help="biword JSON file or literal; with --inverse an SSAF pair")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--render", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("growth", help="growth diagram of a biword", parents=[common])
    p.add_argument("input")
    p.add_argument("--render", action="store_true")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("crystal", help="crystal operators", parents=[common])
    csub = p.add_subparsers(dest="op", required=True)
    for name in ("e", "f"):
        q = csub.add_parser(name, parents=[common])
        q.add_argument("r", type=int)
        q.add_argument("word")
        q.add_argument("--power", type=int, default=1)
        q.set_defaults(func=cmd_crystal)
    q = csub.add_parser("upsilon", parents=[common])
    q.add_argument("r", type=int)
    q.add_argument("word", metavar="biword")
    q.add_argument("--star", action="store_true", help="act on the top row")
    q.set_defaults(func=cmd_crystal)
    q = csub.add_parser("check-corner", parents=[common])
    q.add_argument("shape", help="row lengths, e.g. (2,2)")
    q.add_argument("r", type=int)
    q.add_argument("biword")
    q.set_defaults(func=cmd_check_corner)

    p = sub.add_parser("bruhat", help="Bruhat order on orbits", parents=[common])
    p.add_argument("op", choices=["leq", "orbit"])
    p.add_argument("values", nargs="+")
    p.set_defaults(func=cmd_bruhat)

    p = sub.add_parser("poly", help="key polynomials and atoms", parents=[common])
    p.add_argument("kind", choices=["key", "atom"])
    p.add_argument("nu")
    p.add_argument("--operator", action="store_true", help="use the operator recursion")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("keypair", help="key-pair of a biword", parents=[common])
    p.add_argument("input")
    p.add_argument("--shape", help="near staircase JSON to classify against")
    p.set_defaults(func=cmd_keypair)

    p = sub.add_parser("check-bijection", help="layer-cell detection table", parents=[common])
    p.add_argument("shape")
    p.add_argument("--max-mult", type=int, required=True)
    p.set_defaults(func=cmd_check_bijection)

    p = sub.add_parser("verify", help="three-sided kernel expansion check", parents=[common])
    p.add_argument("shape")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--variant", choices=["all", *kernel.VARIANTS], default="all")
    p.add_argument("--json", dest="report", metavar="FILE", help="write the full JSON report")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="run a list of verify / check-bijection jobs", parents=[common])
    p.add_argument("config")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, NotInImage, ValueError, KeyError, IndexError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())
