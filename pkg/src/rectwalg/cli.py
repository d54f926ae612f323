"""rectwalg command line: verify, classify, enumerate, orbit.

Exit status: 0 when every check passes, 1 when one fails, 2 for bad input.
Set RECTWALG_WORKERS to spread work over processes; output order does not
depend on it.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import walg
from .classify import SCHEMA, classify, orbit
from .exact import num
from .lie import Pyramid, SignData, sign_str
from .tableaux import RowClass, enumerate_row_classes, load_json

DEFAULT_POOL = "-2,-1,0,1,2,1/2,-1/2,3/2,-3/2"
VERIFY_SCHEMA = "rectwalg.verify/1"
CHECKS = {
    "membership": walg.check_membership,
    "miura_kappa": walg.check_gens_identity,
    "kernel": walg.check_kernel,
    "symmetry": walg.check_symmetry_relation,
}


class UsageError(Exception):
    pass


def workers():
    raw = os.environ.get("RECTWALG_WORKERS", "1")
    try:
        w = int(raw)
    except ValueError:
        raise UsageError(f"RECTWALG_WORKERS must be an integer, got {raw!r}")
    return max(1, w)


def _map(fn, items):
    w = workers()
    if w == 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=w) as ex:
        return list(ex.map(fn, items, chunksize=16))


def _signdata(args):
    try:
        return SignData(args.n, args.l, args.eps)
    except ValueError as e:
        raise UsageError(str(e))


def _read_rowclass(path, sd):
    try:
        if path == "-":
            data = sys.stdin.read()
        else:
            with open(path) as f:
                data = f.read()
        n, l, rows = load_json(data)
    except (OSError, ValueError, KeyError) as e:
        raise UsageError(f"cannot read tableau {path}: {e}")
    if (n, l) != (sd.n, sd.l):
        raise UsageError(f"tableau is {n}x{l} but --n/--l give {sd.n}x{sd.l}")
    try:
        return RowClass(n, l, rows)
    except (ValueError, KeyError) as e:
        raise UsageError(f"invalid tableau: {e}")


def _parse_pool(text):
    try:
        return [num(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise UsageError(f"bad --pool: {e}")


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _run_check(item):
    name, n, l, eps, order, R = item
    return CHECKS[name](Pyramid(n, l, eps, order=order), R)


def cmd_verify(args):
    sd = _signdata(args)
    R = args.order if args.order is not None else sd.l + 2
    items = [(name, sd.n, sd.l, sd.eps, args.labelling, R) for name in CHECKS]
    recs = [r for batch in _map(_run_check, items) for r in batch]
    if args.quadratic:
        recs += walg.check_quadratic_relation(Pyramid(sd.n, sd.l, sd.eps, order=args.labelling))
    recs.sort(key=lambda r: (r["check"], _none_key(r["i"]), _none_key(r["j"]), _none_key(r["r"])))
    failed = [r for r in recs if r["status"] != "pass"]
    payload = {"schema": VERIFY_SCHEMA, "n": sd.n, "l": sd.l, "eps": sign_str(sd.eps),
               "R": R, "results": recs, "failures": len(failed)}
    lines = []
    for name in sorted({r["check"] for r in recs}):
        mine = [r for r in recs if r["check"] == name]
        bad = [r for r in mine if r["status"] != "pass"]
        lines.append(f"{name}: {len(mine) - len(bad)}/{len(mine)} pass")
        for r in bad:
            lines.append(f"  FAIL i={r['i']} j={r['j']} r={r['r']}: {r['witness']}")
    _emit(args, payload, lines)
    return 1 if failed else 0


def _none_key(x):
    return (x is None, x if x is not None else 0)


def _result_line(res):
    d = res.to_dict()
    rows = "; ".join(f"{i}: ({', '.join(r)})" for i, r in d["rows"].items())
    flag = "" if res.agree else "  DISAGREE"
    return f"[{rows}] tableaux={d['findim_tableaux']} yangian={d['findim_yangian']} branch={d['branch']}{flag}"


def cmd_classify(args):
    sd = _signdata(args)
    rc = _read_rowclass(args.tableau, sd)
    res = classify(rc, sd)
    _emit(args, res.to_dict(), [_result_line(res)])
    return 0 if res.agree else 1


def _classify_item(item):
    rc, n, l, eps = item
    return classify(rc, SignData(n, l, eps)).to_dict()


def cmd_enumerate(args):
    sd = _signdata(args)
    pool = _parse_pool(args.pool)
    if len(pool) < 1:
        raise UsageError("--pool is empty")
    classes = sorted(enumerate_row_classes(sd.n, sd.l, pool))
    out = _map(_classify_item, [(rc, sd.n, sd.l, sd.eps) for rc in classes])
    bad = sum(not d["agree"] for d in out)
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "n": sd.n, "l": sd.l, "eps": sign_str(sd.eps),
                          "count": len(out), "findim": sum(d["findim_tableaux"] for d in out),
                          "disagreements": bad, "results": out}, indent=2, sort_keys=True))
    else:
        for d in out:
            rows = "; ".join(f"{i}: ({', '.join(r)})" for i, r in d["rows"].items())
            flag = "" if d["agree"] else "  DISAGREE"
            print(f"[{rows}] tableaux={d['findim_tableaux']} yangian={d['findim_yangian']} "
                  f"branch={d['branch']}{flag}")
        print(f"{len(out)} classes, {sum(d['findim_tableaux'] for d in out)} finite dimensional, "
              f"{bad} disagreements")
    return 1 if bad else 0


def cmd_orbit(args):
    sd = _signdata(args)
    rc = _read_rowclass(args.tableau, sd)
    try:
        orb = orbit(rc, sd)
    except ValueError as e:
        raise UsageError(str(e))
    payload = {"schema": "rectwalg.orbit/1", "n": sd.n, "l": sd.l, "eps": sign_str(sd.eps),
               "orbit": [x.to_dict()["rows"] for x in orb]}
    _emit(args, payload, [repr(x) for x in orb] + [f"orbit size {len(orb)}"])
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="rectwalg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--l", type=int, required=True)
        sp.add_argument("--eps", choices=["+", "-"], required=True)
        sp.add_argument("--format", choices=["json", "text"], default="text")

    v = sub.add_parser("verify", help="check the W-algebra generators against the twisted Yangian")
    common(v)
    v.add_argument("--order", type=int, default=None, help="truncation R (default l+2)")
    v.add_argument("--labelling", choices=["column", "row"], default="column")
    v.add_argument("--quadratic", action="store_true", help="also spot-check the quadratic relation")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="decide finite dimensionality of L(A)")
    common(c)
    c.add_argument("--tableau", required=True, help="JSON tableau file, or - for stdin")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("enumerate", help="classify every row class over an entry pool")
    common(e)
    e.add_argument("--pool", default=DEFAULT_POOL, help="comma separated entries")
    e.set_defaults(func=cmd_enumerate)

    o = sub.add_parser("orbit", help="component group orbit of a row class")
    common(o)
    o.add_argument("--tableau", required=True)
    o.set_defaults(func=cmd_orbit)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except UsageError as e:
        print(f"rectwalg: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
