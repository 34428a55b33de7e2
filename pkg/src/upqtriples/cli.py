"""Command-line front end.

Every command prints a single record: JSON (default), CSV or plain text.
Exit status is 0 on success, 1 on bad input and 2 when two independent
computations disagree.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import walls as ch
from . import sweeps
from .extensions import expected_dim, hom_complex_chi
from .invariants import (
    HiggsType,
    InputError,
    InvariantViolation,
    MinimaType,
    TripleType,
    census,
    higgs_to_triple,
    is_allowed,
    minima_type,
    mw_bound,
    mw_value,
    triple_to_higgs,
)
from .stability import SubtripleClass, alpha_max
from .vhs import (
    HodgeChain,
    NotMinimumNumerical,
    adjoint_grading,
    chain_to_higgs,
    classify_chain,
    iso_feasible,
)

SCHEMA_VERSION = "1"
log = logging.getLogger("upqtriples")

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")
_RANGE_RE = re.compile(r"^(-?\d+)(?::(-?\d+))?$")


def fmt(x) -> Any:
    """Serialize a rational as ``"a/b"`` (or ``"a"``); pass other values through."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(f"not a rational 'a/b' or integer: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise argparse.ArgumentTypeError("denominator must be positive")
    return Fraction(text)


def parse_range(text: str) -> Tuple[int, int]:
    m = _RANGE_RE.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"expected 'lo:hi' or an integer, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return lo, hi


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def parse_triple(text: str) -> TripleType:
    vals = parse_int_list(text)
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("a triple is 'n1,n2,d1,d2'")
    try:
        return TripleType(*vals)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc))


@dataclass
class Record:
    result: Dict[str, Any]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    provenance: str = "formula"


def _triple_json(t: TripleType) -> Dict[str, int]:
    return {"n1": t.n1, "n2": t.n2, "d1": t.d1, "d2": t.d2}


def _higgs_json(h: HiggsType) -> Dict[str, int]:
    return {"p": h.p, "q": h.q, "d_V": h.d_V, "d_W": h.d_W}


def _sub_json(s: SubtripleClass) -> Dict[str, int]:
    return {"n1p": s.n1p, "n2p": s.n2p, "dtot": s.dtot}


def _wall_json(w: ch.Wall) -> Dict[str, Any]:
    return {"alpha": fmt(w.alpha), "witnesses": [_sub_json(s) for s in w.witnesses]}


def _chamber_json(c: ch.Chamber) -> Dict[str, str]:
    return {"lower": fmt(c.lower), "upper": fmt(c.upper)}


def _location_json(loc: ch.Location) -> Dict[str, Any]:
    if isinstance(loc, ch.OnWall):
        return {"kind": "OnWall", "wall": _wall_json(loc.wall)}
    if isinstance(loc, ch.Inside):
        return {"kind": "Inside", "chamber": _chamber_json(loc.chamber)}
    return {"kind": "OutOfRange", "alpha": fmt(loc.alpha)}


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError("missing required flag(s): " + " ".join("--" + m for m in missing))


# -- commands -------------------------------------------------------------


def cmd_census(args) -> Record:
    _require(args, "p", "q", "genus", "dv", "dw")
    pairs = census(args.p, args.q, args.genus, args.dv, args.dw)
    rows = [{"d_V": h.d_V, "d_W": h.d_W, "mw_value": fmt(mw_value(h))} for h in pairs]
    return Record({
        "p": args.p, "q": args.q, "genus": args.genus,
        "bound": fmt(mw_bound(args.p, args.q, args.genus)),
        "count": len(rows), "pairs": rows,
    }, rows)


def cmd_translate(args) -> Record:
    _require(args, "genus")
    g = args.genus
    if args.p is not None:
        _require(args, "q", "dv", "dw")
        h = HiggsType(args.p, args.q, _single(args.dv, "--dv"), _single(args.dw, "--dw"))
        mt = minima_type(h)
        triples = {side.value: higgs_to_triple(h, g, side)
                   for side in (MinimaType.CZero, MinimaType.BZero)}
        rows = [{"side": s, **_triple_json(t)} for s, t in sorted(triples.items())]
        return Record({
            "higgs": _higgs_json(h),
            "minima_type": mt.value,
            "default_side": "CZero" if mt is MinimaType.Both else mt.value,
            "allowed": is_allowed(h, g),
            "mw_value": fmt(mw_value(h)),
            "triples": {s: _triple_json(t) for s, t in triples.items()},
        }, rows)
    _require(args, "n1", "n2", "d1", "d2")
    t = TripleType(args.n1, args.n2, args.d1, args.d2)
    side = MinimaType(args.side)
    h = triple_to_higgs(t, g, side)
    return Record({
        "triple": _triple_json(t), "side": side.value, "higgs": _higgs_json(h),
        "minima_type": minima_type(h).value, "allowed": is_allowed(h, g),
    }, [{"side": side.value, **_higgs_json(h)}])


def _single(rng: Tuple[int, int], flag: str) -> int:
    if rng[0] != rng[1]:
        raise InputError(f"{flag} takes a single value here")
    return rng[0]


def _chamber_setup(args):
    _require(args, "n1", "n2", "d1", "d2")
    t = TripleType(args.n1, args.n2, args.d1, args.d2)
    used, dualized = ch.normalize(t)
    if dualized:
        log.info("n1 < n2: working with the dual triple %s", used.as_tuple())
    cap = args.cap
    bound = alpha_max(used)
    if bound.unbounded and cap is None:
        if args.genus is None:
            raise InputError("n1 = n2: pass --cap or --genus")
        cap = Fraction(max(4 * args.genus, 2 * (2 * args.genus - 2) + 1))
        log.info("default cap %s", cap)
    upper = ch.alpha_range_upper(used, cap)
    head = {
        "triple": _triple_json(t),
        "dualized": dualized,
        "used_triple": _triple_json(used),
        "alpha_max": "unbounded" if bound.unbounded else fmt(bound.value),
        "range": {"lower": "0", "upper": fmt(upper)},
    }
    if bound.unbounded:
        head["cap"] = fmt(cap)
    return used, cap, head


def cmd_walls(args) -> Record:
    used, cap, head = _chamber_setup(args)
    walls = ch.critical_values(used, cap)
    head["wall_alphas"] = [fmt(w.alpha) for w in walls]
    head["walls"] = [_wall_json(w) for w in walls]
    rows = [{"alpha": fmt(w.alpha), **_sub_json(s)} for w in walls for s in w.witnesses]
    return Record(head, rows)


def cmd_chambers(args) -> Record:
    used, cap, head = _chamber_setup(args)
    walls = ch.critical_values(used, cap)
    cells = ch.chambers(used, cap)
    head["wall_alphas"] = [fmt(w.alpha) for w in walls]
    head["walls"] = [_wall_json(w) for w in walls]
    head["chambers"] = [_chamber_json(c) for c in cells]
    if args.genus is not None:
        head["alpha_2g_2"] = {"alpha": 2 * args.genus - 2,
                              **_location_json(ch.chamber_of(used, 2 * args.genus - 2, cap))}
    if args.alpha is not None:
        head["alpha_query"] = {"alpha": fmt(args.alpha),
                               **_location_json(ch.chamber_of(used, args.alpha, cap))}
    rows = [_chamber_json(c) for c in cells]
    return Record(head, rows)


def cmd_chi(args) -> Record:
    _require(args, "n1", "n2", "d1", "d2", "genus")
    t = TripleType(args.n1, args.n2, args.d1, args.d2)
    g = args.genus
    self_chi = hom_complex_chi(t, t, g)
    result = {
        "triple": _triple_json(t), "genus": g,
        "chi_self": vars(self_chi), "expected_dim": expected_dim(t, g),
    }
    rows = [{"pair": "self", **vars(self_chi)}]
    if (args.sub is None) != (args.quot is None):
        raise InputError("--sub and --quot go together")
    if args.sub is not None:
        ext = hom_complex_chi(args.quot, args.sub, g)
        result["extension"] = {"sub": _triple_json(args.sub), "quot": _triple_json(args.quot),
                               **vars(ext)}
        rows.append({"pair": "extension", **vars(ext)})
    return Record(result, rows)


def cmd_minima(args) -> Record:
    _require(args, "ranks", "genus")
    ranks = args.ranks
    degrees = args.degrees if args.degrees is not None else [0] * len(ranks)
    if args.sides is not None:
        chain = HodgeChain(tuple(ranks), tuple(degrees), tuple(args.sides.upper()))
    else:
        chain = HodgeChain.alternating(ranks, degrees, args.start)
    verdict = classify_chain(chain, args.genus)
    if isinstance(verdict, NotMinimumNumerical):
        v = {"kind": "NotMinimumNumerical", "k": verdict.k}
    else:
        v = {"kind": type(verdict).__name__}
    grading = [u._asdict() for u in adjoint_grading(chain)]
    tests = [{"k": k, "feasible": iso_feasible(chain, k, args.genus)}
             for k in range(2, chain.length, 2)]
    try:
        higgs = _higgs_json(chain_to_higgs(chain))
    except InputError:
        higgs = None
    return Record({
        "chain": {"ranks": list(chain.ranks), "degrees": list(chain.degrees),
                  "sides": "".join(chain.sides)},
        "genus": args.genus, "verdict": v, "grading": grading,
        "even_weight_tests": tests, "higgs": higgs,
    }, grading)


def cmd_check(args) -> Record:
    results = sweeps.run_all(
        max_rank=args.max_rank, genera=args.genera, window=args.dv or (-10, 10),
        rank_sum=args.rank_sum, degree_bound=args.degree_bound,
        cap=args.cap if args.cap is not None else Fraction(10),
    )
    rows = [{"sweep": r.name, "checked": r.checked, "failures": len(r.failures),
             "passed": r.passed} for r in results]
    rec = Record({"sweeps": [dict(row, examples=[str(f) for f in r.failures[:5]])
                             for row, r in zip(rows, results)],
                  "passed": all(r.passed for r in results)}, rows, "formula vs oracle")
    if not rec.result["passed"]:
        raise _CheckFailed(rec)
    return rec


class _CheckFailed(Exception):
    def __init__(self, record: Record):
        self.record = record


COMMANDS: Dict[str, Callable[[Any], Record]] = {
    "census": cmd_census,
    "translate": cmd_translate,
    "walls": cmd_walls,
    "chambers": cmd_chambers,
    "chi": cmd_chi,
    "minima": cmd_minima,
    "check": cmd_check,
}


# -- output ---------------------------------------------------------------


def _echo(args) -> Dict[str, Any]:
    out = {"name": args.command}
    for k, v in sorted(vars(args).items()):
        if k in ("command", "format", "verbose", "seedless") or v is None:
            continue
        if isinstance(v, TripleType):
            v = list(v.as_tuple())
        elif isinstance(v, tuple):
            v = f"{v[0]}:{v[1]}"
        out[k] = fmt(v)
    return out


def render(args, rec: Record) -> str:
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": _echo(args),
               "result": rec.result, "provenance": rec.provenance}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        if rec.rows:
            w = csv.DictWriter(buf, fieldnames=list(rec.rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rec.rows)
        return buf.getvalue()
    return "".join(f"{line}\n" for line in _text_lines(rec.result))


def _text_value(v) -> str:
    if isinstance(v, list):
        return "[" + " ".join(_text_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "(" + ",".join(str(x) for x in v.values()) + ")"
    return str(v)


def _text_lines(obj, prefix: str = "") -> List[str]:
    lines = []
    for k, v in sorted(obj.items()):
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            lines.extend(_text_lines(v, key + "."))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{key}:")
            lines.extend("  " + ", ".join(f"{a}={_text_value(b)}" for a, b in sorted(item.items()))
                         for item in v)
        elif isinstance(v, list):
            lines.append(f"{key}: " + ", ".join(str(x) for x in v))
        else:
            lines.append(f"{key}: {v}")
    return lines


# -- argument parsing -----------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-6:6" through as a value, like a plain negative number
        self._negative_number_matcher = re.compile(r"^-\d+(:-?\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="upqtriples",
                     description="U(p,q) invariants, triple stability chambers and minima.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--genus", type=int)
        p.add_argument("--seedless", action="store_true",
                       help="reserved; nothing here is random")
        p.add_argument("-v", "--verbose", action="store_true")

    def higgs_flags(p):
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--dv", type=parse_range, help="'lo:hi' or an integer")
        p.add_argument("--dw", type=parse_range, help="'lo:hi' or an integer")

    def triple_flags(p):
        for name in ("n1", "n2", "d1", "d2"):
            p.add_argument(f"--{name}", type=int)

    p = sub.add_parser("census", help="Milnor-Wood allowed (d_V, d_W) in a window")
    common(p)
    higgs_flags(p)

    p = sub.add_parser("translate", help="Higgs <-> triple invariants at alpha = 2g-2")
    common(p)
    higgs_flags(p)
    triple_flags(p)
    p.add_argument("--side", choices=("CZero", "BZero"), default="CZero")

    for name in ("walls", "chambers"):
        p = sub.add_parser(name, help=f"critical values / {name} of the alpha range")
        common(p)
        triple_flags(p)
        p.add_argument("--cap", type=parse_rational)
        if name == "chambers":
            p.add_argument("--alpha", type=parse_rational)

    p = sub.add_parser("chi", help="Euler characteristics of the extension complex")
    common(p)
    triple_flags(p)
    p.add_argument("--sub", type=parse_triple, help="'n1,n2,d1,d2' of the subtriple T'")
    p.add_argument("--quot", type=parse_triple, help="'n1,n2,d1,d2' of the quotient T''")

    p = sub.add_parser("minima", help="classify a Hodge chain")
    common(p)
    p.add_argument("--ranks", type=parse_int_list)
    p.add_argument("--degrees", type=parse_int_list)
    p.add_argument("--sides", help="e.g. VWV; overrides --start")
    p.add_argument("--start", choices=("V", "W"), default="V")

    p = sub.add_parser("check", help="run the consistency sweeps")
    common(p)
    p.add_argument("--dv", type=parse_range, help="degree window for the Milnor-Wood sweep")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--genera", type=parse_int_list, default=[2, 3, 4])
    p.add_argument("--rank-sum", type=int, default=5)
    p.add_argument("--degree-bound", type=int, default=6)
    p.add_argument("--cap", type=parse_rational)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.seedless:
        parser.print_usage(sys.stderr)
        print("upqtriples: error: --seedless is reserved; no command uses randomness",
              file=sys.stderr)
        return 1
    try:
        rec = COMMANDS[args.command](args)
    except _CheckFailed as exc:
        sys.stdout.write(render(args, exc.record))
        return 2
    except InputError as exc:
        print(f"upqtriples: error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"upqtriples: invariant violation: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(args, rec))
    return 0


if __name__ == "__main__":
    sys.exit(main())
