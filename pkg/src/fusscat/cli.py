"""Command-line front end: tables, structure exports and check suites."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import analytics as A
from .config import CapExceeded, caps, parse_caps, set_caps
from .coxeter import CoxeterError, build_group, parse_type
from .posets import bits

STRUCTURES = ("nc", "nck", "classical", "typeB", "nn", "shi", "cluster")


class UsageError(ValueError):
    pass


# ----- argument parsing helpers -----------------------------------------------

def expand_int_range(text: str) -> list[int]:
    """``1..3`` or ``1,2,5`` or a mix of both."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        if ".." in part:
            a, b = part.split("..", 1)
            lo, hi = int(a), int(b)
            if lo > hi:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    return out


def _label(family: str, rank: int, m: Optional[int]) -> str:
    return f"I2({m})" if family == "I2" else f"{family}{rank}"


def expand_types(text: str) -> list[str]:
    """Type lists such as ``A1..A5,B2..B4,H3`` or ``I2(5)..I2(8)``."""
    out: list[str] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        if ".." in part:
            a, b = (parse_type(x) for x in part.split("..", 1))
            if a[0] != b[0]:
                raise UsageError(f"range {part!r} mixes families")
            if a[0] == "I2":
                out.extend(_label("I2", 2, m) for m in range(a[2], b[2] + 1))
            else:
                out.extend(_label(a[0], r, None) for r in range(a[1], b[1] + 1))
        else:
            fam, r, m = parse_type(part)
            out.append(_label(fam, r, m))
    return out


def group_label(args) -> str:
    if args.type is None:
        raise UsageError("--type is required")
    if args.rank is None and args.m is None:
        fam, r, m = parse_type(args.type)
        return _label(fam, r, m)
    fam = args.type.upper()
    if fam in ("I", "I2"):
        if args.m is None:
            raise UsageError("type I2 needs --m")
        return f"I2({args.m})"
    if fam == "G":
        return "G2"
    if args.rank is None:
        raise UsageError("--rank is required")
    return f"{fam}{args.rank}"


# ----- output -------------------------------------------------------------------

def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def dump_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ----- tables ---------------------------------------------------------------------

def table_rows(which: str, types: Sequence[str], ks: Sequence[int]) -> tuple[list[str], list[list]]:
    if which == "narayana":
        header = ["type", "rank", "k", "i", "narayana"]
        rows = []
        for t in types:
            data = A.group_data(t)
            for k in ks:
                vec = A.narayana_vector(t, k)
                rows.extend([t, data.rank, k, i, int(v)] for i, v in enumerate(vec))
                rows.append([t, data.rank, k, "total", int(sum(vec))])
        return header, rows
    if which == "catalan":
        header = ["type", "rank", "k", "catalan", "positive_catalan"]
        rows = [[t, A.group_data(t).rank, k, int(A.fuss_catalan(t, k)), int(A.positive_fuss_catalan(t, k))]
                for t in types for k in ks]
        return header, rows
    if which == "degrees":
        header = ["type", "rank", "degrees", "h", "order", "reflections"]
        rows = []
        for t in types:
            d = A.group_data(t)
            rows.append([t, d.rank, " ".join(map(str, d.degrees)), d.h, d.order, d.num_positive])
        return header, rows
    raise UsageError(f"unknown table {which!r}")


def cmd_tables(args) -> str:
    header, rows = table_rows(args.table, expand_types(args.types), expand_int_range(args.k))
    if args.format == "csv":
        return dump_csv(header, rows)
    if args.format == "json":
        return dump_json([dict(zip(header, r)) for r in rows])
    raise UsageError("tables support --format csv or json")


# ----- enumerate ------------------------------------------------------------------

def _poset_export(P, label, fmt: str, extra: dict, name: str) -> str:
    if fmt == "dot":
        return P.to_dot(name, label)
    out = dict(extra)
    out.update(P.to_json(label))
    out["size"] = P.size
    return dump_json(out)


def _classical_n(label: str, typeB: bool) -> int:
    fam, r, _ = parse_type(label)
    if typeB:
        if fam != "B":
            raise UsageError("typeB partitions need --type B")
        return r
    if fam != "A":
        raise UsageError("classical partitions need --type A")
    return r + 1


def cmd_enumerate(args) -> str:
    what = args.structure
    label = group_label(args)
    k = args.k
    fmt = args.format
    if what == "nc":
        from .noncrossing import build_nc

        nc = build_nc(build_group(label))
        return _poset_export(nc.poset, nc.element_name, fmt, {"type": label, "structure": "nc"}, "NC")
    if what == "nck":
        from .noncrossing import build_nc, build_nck

        nck = build_nck(build_nc(build_group(label)), k)
        return _poset_export(nck.poset, nck.element_name, fmt,
                             {"type": label, "k": k, "structure": "nck"}, "NCk")
    if what in ("classical", "typeB"):
        from .classical import enumerate_kdivisible

        typeB = what == "typeB"
        n = _classical_n(label, typeB)
        C = enumerate_kdivisible(n, k, typeB)
        lab = lambda i: json.dumps(C.elements[i].to_json(), separators=(",", ":"))
        if fmt == "dot":
            return C.poset.to_dot("Partitions", lab)
        P = C.poset
        return dump_json({"structure": what, "n": n, "k": k, "size": len(C),
                          "elements": [C.elements[i].to_json() for i in range(len(C))],
                          "ranks": list(C.ranks), "covers": [[i, j] for i, j in P.covers()]})
    if what == "nn":
        from .nonnesting import antichains, build_root_poset, filter_poset

        RP = build_root_poset(build_group(label))
        F = filter_poset(RP)
        name = lambda i: "{" + ",".join(RP.name(j) for j in sorted(bits(F.labels[i]))) + "}"
        if fmt == "dot":
            return F.to_dot("Filters", name)
        return dump_json({"structure": "nn", "type": label, "root_poset": RP.to_json(),
                          "antichains": [[RP.name(j) for j in sorted(bits(a))] for a in antichains(RP)],
                          "filters": F.to_json(name)})
    if what == "shi":
        from .nonnesting import shi_chambers

        if fmt == "dot":
            raise UsageError("shi chambers export as JSON only")
        ch = shi_chambers(build_group(label), k)
        return dump_json({"structure": "shi", "type": label, "k": k, "count": len(ch),
                          "bounded": sum(1 for c in ch if c.bounded),
                          "chambers": [c.to_json() for c in ch]})
    if what == "cluster":
        from .cluster import build_cluster_complex

        C = build_cluster_complex(build_group(label), k)
        if fmt == "dot":
            m = len(C.vertices)
            lines = ["graph Compatibility {"]
            lines += [f'  n{v} [label="{C.vertex_name(v)}"];' for v in range(m)]
            lines += [f"  n{a} -- n{b};" for a in range(m) for b in range(a + 1, m) if not C.crosses(a, b)]
            lines.append("}")
            return "\n".join(lines) + "\n"
        out = C.to_json()
        out["structure"] = "cluster"
        return dump_json(out)
    raise UsageError(f"unknown structure {what!r}")


# ----- check ----------------------------------------------------------------------

def cmd_check(args) -> tuple[str, int]:
    from .checks import SUITES, has_theorem_failure, report, run_suites

    names = []
    for s in args.suites:
        if s == "all":
            names.extend(SUITES)
        elif s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; choose from {', '.join(sorted(SUITES))}")
        else:
            names.append(s)
    if not names:
        return dump_json(report([])), 0
    groups = expand_types(args.types) if args.types else [group_label(args)]
    records = run_suites(names, groups, expand_int_range(args.k), expand_int_range(args.l), args.i)
    return dump_json(report(records)), (1 if has_theorem_failure(records) else 0)


# ----- main ---------------------------------------------------------------------

def _add_group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="family letter (with --rank) or a full label such as A3 or I2(5)")
    p.add_argument("--rank", type=int)
    p.add_argument("--m", type=int, help="dihedral parameter for type I2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fusscat", description=__doc__)
    parser.add_argument("--caps", default="", help="cap overrides, e.g. max_poset=100000")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", help="Fuss-Narayana, Fuss-Catalan and degree tables")
    t.add_argument("--types", required=True)
    t.add_argument("--k", default="1")
    t.add_argument("--table", choices=("narayana", "catalan", "degrees"), default="narayana")
    t.add_argument("--format", choices=("csv", "json"), default="csv")

    e = sub.add_parser("enumerate", help="export a structure as JSON or DOT")
    e.add_argument("structure", choices=STRUCTURES)
    _add_group_args(e)
    e.add_argument("--k", type=int, default=1)
    e.add_argument("--format", choices=("json", "dot"), default="json")

    c = sub.add_parser("check", help="run theorem and conjecture suites")
    c.add_argument("suites", nargs="*")
    _add_group_args(c)
    c.add_argument("--types", help="type list instead of --type, e.g. A2..A3,B2")
    c.add_argument("--k", default="1")
    c.add_argument("--l", default="1")
    c.add_argument("--i", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous = caps()
    try:
        if args.caps:
            set_caps(parse_caps(args.caps, previous))
        code = 0
        if args.command == "tables":
            out = cmd_tables(args)
        elif args.command == "enumerate":
            out = cmd_enumerate(args)
        else:
            out, code = cmd_check(args)
    except CapExceeded as exc:
        print(f"fusscat: refused: {exc} (raise it with --caps {exc.cap}=N)", file=sys.stderr)
        return 3
    except (UsageError, CoxeterError, ValueError, KeyError) as exc:
        print(f"fusscat: error: {exc}", file=sys.stderr)
        return 2
    finally:
        set_caps(previous if args.caps else None)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
