"""Command line interface: ``hook-syzygy {betti,resolve,verify,dcp,fi}``.

``run(argv)`` returns ``(exit_code, document)``; exit codes are 0 on success,
1 when a verification fails and 2 on a usage error (message and usage on
stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from typing import Sequence

from . import dcp as dcp_mod
from .exact_algebra import GF, QQ, ZZ, CoefficientRing, Polynomial, PolynomialMatrix
from .fi import check_functor_composition, check_square_commutes, random_injection
from .report import VerificationReport
from .resolution import (Differential, GradedFreeModule, ResolutionComplex, betti_table,
                         build_resolution, verify_resolution)
from .tableaux import HookTableau, InjectionMap

__all__ = ["run", "main", "serialize_complex", "parse_complex_json", "UsageError"]

FORMATS = ("json", "csv", "cas-script", "pretty")
_FORMATS_BY_COMMAND = {
    "betti": FORMATS,
    "resolve": FORMATS,
    "verify": ("json", "csv", "pretty"),
    "dcp": FORMATS,
    "fi": ("json", "csv", "pretty"),
}
# keeps every subcommand at desk scale
_MAX_N = {"betti": 200, "resolve": 9, "verify": 8, "dcp": 6, "fi": 7}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D401 - argparse hook
        raise UsageError(message)


@dataclass(frozen=True)
class CommandConfig:
    subcommand: str
    d: int
    n: int
    i: int | None
    m: int | None
    l: int | None  # noqa: E741
    t_max: int | None
    field: CoefficientRing
    all_fields: bool
    fmt: str
    seed: int
    count: int
    eps: tuple[int, ...] | None


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--d", type=int, required=True, help="degree of the generators")
    common.add_argument("--n", type=int, required=True, help="number of variables")
    common.add_argument("--format", dest="fmt", default="pretty", choices=FORMATS)

    checks = _Parser(add_help=False)
    checks.add_argument("--tmax", type=int, default=None, help="highest degree checked (default n+3)")
    checks.add_argument("--field", default="QQ", help="QQ, ZZ or Zp:p")
    checks.add_argument("--all-fields", action="store_true",
                        help="QQ, Z2 and Z3 plus integer Smith form checks")

    parser = _Parser(prog="hook-syzygy",
                     description="Equivariant resolutions of squarefree Veronese ideals.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    sub.add_parser("betti", parents=[common], help="graded Betti table")
    sub.add_parser("resolve", parents=[common], help="emit the resolution matrices")
    sub.add_parser("verify", parents=[common, checks], help="run the resolution checks")
    sub.add_parser("dcp", parents=[common, checks], help="hook De Concini-Procesi quotient")
    fi = sub.add_parser("fi", parents=[common, checks], help="FI chain maps and functoriality")
    fi.add_argument("--m", type=int, default=None, help="target size of the injection (default n+1)")
    fi.add_argument("--l", type=int, default=None, help="size for the second injection (default m+1 capped)")
    fi.add_argument("--i", type=int, default=None, help="homological index (default: all)")
    fi.add_argument("--eps", default=None, help="explicit injection, e.g. 3,1,2")
    fi.add_argument("--count", type=int, default=20, help="random injections to test")
    fi.add_argument("--seed", type=int, default=0)
    return parser


def _config(ns: argparse.Namespace) -> CommandConfig:
    cmd = ns.subcommand
    d, n = ns.d, ns.n
    if d < 1:
        raise UsageError("--d must be at least 1")
    if n < d:
        raise UsageError(f"need d <= n, got d={d}, n={n}")
    if n > _MAX_N[cmd]:
        raise UsageError(f"--n is capped at {_MAX_N[cmd]} for {cmd}")
    if cmd == "betti" and ns.fmt == "cas-script" and n > _MAX_N["resolve"]:
        raise UsageError(f"cas-script output is capped at n = {_MAX_N['resolve']}")
    if ns.fmt not in _FORMATS_BY_COMMAND[cmd]:
        raise UsageError(f"format {ns.fmt!r} is not available for {cmd}")
    t_max = getattr(ns, "tmax", None)
    if t_max is not None and not 0 <= t_max <= 3 * n + 6:
        raise UsageError(f"--tmax must lie in [0, {3 * n + 6}]")
    try:
        field = CoefficientRing.parse(getattr(ns, "field", "QQ"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    m = l = i = None
    eps = None
    count, seed = getattr(ns, "count", 20), getattr(ns, "seed", 0)
    if cmd == "fi":
        if ns.eps is not None:
            try:
                eps = tuple(int(x) for x in ns.eps.split(","))
            except ValueError:
                raise UsageError(f"cannot parse --eps {ns.eps!r}") from None
            if len(eps) != n:
                raise UsageError(f"--eps must list {n} images")
        m = ns.m if ns.m is not None else (max(eps) if eps else min(n + 1, _MAX_N[cmd]))
        l = ns.l if ns.l is not None else min(m + 1, _MAX_N[cmd])  # noqa: E741
        if not n <= m <= l <= _MAX_N[cmd]:
            raise UsageError(f"need n <= m <= l <= {_MAX_N[cmd]}")
        if eps is not None:
            try:
                InjectionMap(eps, m)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        if ns.i is not None:
            if not 0 <= ns.i <= m - d:
                raise UsageError(f"--i must lie in [0, {m - d}]")
            i = ns.i
        if not 1 <= count <= 1000:
            raise UsageError("--count must lie in [1, 1000]")
    return CommandConfig(cmd, d, n, i, m, l, t_max, field, getattr(ns, "all_fields", False),
                         ns.fmt, seed, count, eps)


def run(argv: Sequence[str]) -> tuple[int, str]:
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(argv))
        cfg = _config(ns)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=sys.stderr)
        print(f"hook-syzygy: error: {exc}", file=sys.stderr)
        return 2, ""
    except SystemExit as exc:  # --help
        return (0 if not exc.code else 2), ""
    return _DISPATCH[cfg.subcommand](cfg)


def main(argv: Sequence[str] | None = None) -> int:
    code, doc = run(sys.argv[1:] if argv is None else argv)
    if doc:
        sys.stdout.write(doc if doc.endswith("\n") else doc + "\n")
    return code


# ---------------------------------------------------------------------------
# subcommands


def _cmd_betti(cfg: CommandConfig) -> tuple[int, str]:
    B = betti_table(cfg.d, cfg.n)
    if cfg.fmt == "json":
        return 0, json.dumps({f"({i},{j})": b for (i, j), b in sorted(B.items())})
    if cfg.fmt == "csv":
        return 0, _csv([("i", "j", "beta")] + [(i, j, b) for (i, j), b in sorted(B.items())])
    if cfg.fmt == "cas-script":
        return 0, serialize_complex(build_resolution(cfg.d, cfg.n), "cas-script")
    return 0, _pretty_betti(B, cfg.d)


def _cmd_resolve(cfg: CommandConfig) -> tuple[int, str]:
    C = build_resolution(cfg.d, cfg.n)
    return 0, serialize_complex(C, cfg.fmt)


def _fields(cfg: CommandConfig) -> tuple[list[CoefficientRing], bool]:
    """Fields for exactness checks and whether to run integer Smith checks.

    ``ZZ`` expands to the same bundle as ``--all-fields``.
    """
    if cfg.all_fields or cfg.field == ZZ:
        return [QQ, GF(2), GF(3)], True
    return [cfg.field], False


def _cmd_verify(cfg: CommandConfig) -> tuple[int, str]:
    fields, smith = _fields(cfg)
    rep = verify_resolution(cfg.d, cfg.n, fields, cfg.t_max, smith=smith)
    rep.data["fields"] = [str(f) for f in fields]
    return _report_out(rep, cfg)


def _cmd_dcp(cfg: CommandConfig) -> tuple[int, str]:
    n, d = cfg.n, cfg.d
    fields, _ = _fields(cfg)
    cone = dcp_mod.build_mapping_cone_resolution(n, d)
    series = dcp_mod.equivariant_poincare(n, d)
    if cfg.fmt == "cas-script":
        return 0, serialize_complex(cone, "cas-script")
    rep = VerificationReport(f"hook quotient R_{n}/I_mu, mu={dcp_mod.HookPartition(n, d).mu}")
    for f in fields:
        rep.extend(dcp_mod.verify_regular_sequence(n, d, cfg.t_max, field=f), f"regular_sequence[{f}]")
        rep.extend(dcp_mod.verify_dcp_resolution(n, d, f, cfg.t_max, cone=cone), f"cone[{f}]")
    census = dcp_mod.cone_rank_census(cone)
    ranks = dcp_mod.series_rank_evaluation(series)
    rep.add("series ranks = cone census", census == ranks)
    rep.data["series"] = str(series)
    rep.data["census"] = {f"q^{p} t^{j}": r for (p, j), r in sorted(census.items())}
    if cfg.fmt == "json":
        doc = rep.to_dict()
        doc["data"] = rep.data
        doc["complex"] = _complex_dict(cone)
        return (0 if rep.passed else 1), json.dumps(doc, indent=2)
    return _report_out(rep, cfg)


def _cmd_fi(cfg: CommandConfig) -> tuple[int, str]:
    d, n, m, l = cfg.d, cfg.n, cfg.m, cfg.l  # noqa: E741
    rng = random.Random(cfg.seed)
    if cfg.eps is not None:
        eps1 = [InjectionMap(cfg.eps, m)]
    else:
        eps1 = [random_injection(n, m, rng) for _ in range(cfg.count)]
    indices = [cfg.i] if cfg.i is not None else list(range(m - d + 1))
    rep = VerificationReport(f"FI structure d={d}: [{n}] -> [{m}] -> [{l}]")
    for e1 in eps1:
        e2 = random_injection(m, l, rng)
        for i in indices:
            rep.extend(check_square_commutes(e1, d, i, cfg.t_max), f"square{e1.values}[{i}]")
            rep.extend(check_functor_composition(e1, e2, d, i), f"compose{e1.values},{e2.values}[{i}]")
    return _report_out(rep, cfg)


_DISPATCH = {"betti": _cmd_betti, "resolve": _cmd_resolve, "verify": _cmd_verify,
             "dcp": _cmd_dcp, "fi": _cmd_fi}


def _report_out(rep: VerificationReport, cfg: CommandConfig) -> tuple[int, str]:
    code = 0 if rep.passed else 1
    if cfg.fmt == "json":
        doc = rep.to_dict()
        doc["data"] = rep.data
        return code, json.dumps(doc, indent=2)
    if cfg.fmt == "csv":
        return code, _csv([("verdict", "passed")] + [(v.name, v.passed) for v in rep.verdicts])
    lines = rep.lines()
    if not rep.passed:
        lines.append("failing verdicts:")
        lines += [f"  {v.name}: {json.dumps(v.to_dict()['details'])}" for v in rep.failures()]
    for k, v in rep.data.items():
        lines.append(f"{k}: {v}")
    return code, "\n".join(lines)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _pretty_betti(B: dict[tuple[int, int], int], d: int) -> str:
    L = max(i for i, _ in B)
    cols = [str(i) for i in range(L + 1)]
    vals = [str(B[(i, d + i)]) for i in range(L + 1)]
    w = max(len(s) for s in cols + vals)
    head = "       " + " ".join(s.rjust(w) for s in cols)
    total = "total: " + " ".join(s.rjust(w) for s in vals)
    row = f"{d:>5}: " + " ".join(s.rjust(w) for s in vals)
    return "\n".join([head, total, row])


# ---------------------------------------------------------------------------
# complex serialization


def _complex_dict(C) -> dict:
    if isinstance(C, ResolutionComplex):
        return {
            "kind": "resolution",
            "d": C.d,
            "n": C.n,
            "modules": [{"index": i, "generator_degree": M.generator_degree, "basis": M.labels()}
                        for i, M in enumerate(C.modules)],
            "differentials": [
                {"index": i, "source": i, "target": i - 1,
                 "entries": _triplets(D.matrix, D.target.labels(), D.source.labels())}
                for i, D in enumerate(C.differentials, start=1)],
            "augmentation": [[T.label(), str(mono)]
                             for T, mono in zip(C.modules[0].basis, C.augmentation)],
        }
    if isinstance(C, dcp_mod.ConeComplex):
        return {
            "kind": "mapping-cone",
            "n": C.n,
            "d": C.d,
            "modules": [{"index": p,
                         "summands": [{"q": s.q, "S": list(s.S), "rank": s.rank,
                                       "base_degree": s.base_degree} for s in C.terms[p]],
                         "generator_degrees": C.generator_degrees(p),
                         "basis": list(C.basis_labels[p])}
                        for p in range(len(C.terms))],
            "differentials": [
                {"index": p, "source": p, "target": p - 1,
                 "entries": _triplets(C.differential(p), C.basis_labels[p - 1], C.basis_labels[p])}
                for p in range(1, C.length + 1)],
        }
    raise TypeError(f"cannot serialize {type(C).__name__}")


def _triplets(M: PolynomialMatrix, row_labels, col_labels) -> list[list[str]]:
    return [[row_labels[r], col_labels[c], str(p)] for (r, c), p in sorted(M.entries.items())]


def serialize_complex(C, fmt: str) -> str:
    """Render a resolution or mapping-cone complex as json, csv, cas-script or pretty."""
    if fmt == "json":
        return json.dumps(_complex_dict(C), indent=2)
    if fmt == "csv":
        doc = _complex_dict(C)
        rows = [("differential", "row", "col", "entry")]
        for D in doc["differentials"]:
            rows += [(D["index"], *e) for e in D["entries"]]
        return _csv(rows)
    if fmt == "cas-script":
        return _cas_script(C)
    if fmt == "pretty":
        return _pretty_complex(C)
    raise UsageError(f"unknown format {fmt!r}")


def _matrix_rows(M: PolynomialMatrix) -> list[list[str]]:
    rows = [["0"] * M.cols for _ in range(M.rows)]
    for (r, c), p in M.entries.items():
        rows[r][c] = str(p)
    return rows


def _m2_matrix(M: PolynomialMatrix) -> str:
    return "{" + ", ".join("{" + ", ".join(r) + "}" for r in _matrix_rows(M)) + "}"


def _m2_free(degrees: Sequence[int]) -> str:
    if not degrees:
        return "R^0"
    return "R^{" + ", ".join(str(-g) for g in degrees) + "}"


def _cas_script(C) -> str:
    n = C.n
    gens = ", ".join(f"x{v}" for v in range(1, n + 1))
    out = [f"-- resolution data for n = {n}, d = {C.d}; paste into Macaulay2",
           f"R = QQ[{gens}];"]
    if isinstance(C, ResolutionComplex):
        degs = lambda p: [C.modules[p].generator_degree] * C.modules[p].rank  # noqa: E731
        out.append("I = ideal(" + ", ".join(str(m) for m in C.augmentation) + ");")
        out.append("aug = matrix{{" + ", ".join(str(m) for m in C.augmentation) + "}};")
        mats = [D.matrix for D in C.differentials]
        length = C.length
        first = "aug"
    else:
        degs = C.generator_degrees  # noqa: E731
        gens_q = [str(p) for p in dcp_mod.dcp_generators(n, C.d)]
        out.append("J = ideal(" + ", ".join(gens_q) + ");")
        mats = list(C.differentials)
        length = C.length
        first = None
    for p, M in enumerate(mats, start=1):
        out.append(f"d{p} = map({_m2_free(degs(p - 1))}, {_m2_free(degs(p))}, {_m2_matrix(M)});")
    if first:
        if mats:
            out.append("assert(aug * d1 == 0);")
        out.append("assert(image aug == image gens I);")
    else:
        out.append("assert(image d1 == image gens J);")
    for p in range(1, len(mats)):
        out.append(f"assert(d{p} * d{p + 1} == 0);")
    if mats:
        out.append("Cx = chainComplex {" + ", ".join(f"d{p}" for p in range(1, len(mats) + 1)) + "};")
        for p in range(1, length):
            out.append(f"assert(prune HH_{p} Cx == 0);")
    if first:
        out.append(f"B = res I; assert(length B == {length});")
        for p in range(length + 1):
            out.append(f"assert(rank B_{p} == {len(degs(p))});")
        out.append("print betti B;")
    else:
        out.append("print betti res (R^1/J);")
    return "\n".join(out) + "\n"


def _pretty_matrix(M: PolynomialMatrix, row_labels, col_labels) -> list[str]:
    cells = _matrix_rows(M)
    rw = max((len(s) for s in row_labels), default=0)
    widths = [max([len(col_labels[c])] + [len(cells[r][c]) for r in range(M.rows)])
              for c in range(M.cols)]
    lines = [" " * rw + " | " + "  ".join(col_labels[c].rjust(widths[c]) for c in range(M.cols))]
    lines.append("-" * len(lines[0]))
    for r in range(M.rows):
        lines.append(row_labels[r].rjust(rw) + " | "
                     + "  ".join(cells[r][c].rjust(widths[c]) for c in range(M.cols)))
    return lines


def _pretty_complex(C) -> str:
    doc = _complex_dict(C)
    out = []
    if doc["kind"] == "resolution":
        out.append(f"F^({C.d},{C.n}), ranks " + ", ".join(str(M.rank) for M in C.modules))
        out.append("augmentation: " + ", ".join(f"[{lab}] -> {m}" for lab, m in doc["augmentation"]))
        for i, D in enumerate(C.differentials, start=1):
            out.append("")
            out.append(f"d_{i}: F_{i} -> F_{i - 1}")
            out += _pretty_matrix(D.matrix, D.target.labels(), D.source.labels())
    else:
        out.append(f"mapping cone over R_{C.n}, d={C.d}, ranks "
                   + ", ".join(str(C.rank(p)) for p in range(len(C.terms))))
        for p in range(1, C.length + 1):
            out.append("")
            out.append(f"d_{p}: C_{p} -> C_{p - 1}")
            out += _pretty_matrix(C.differential(p), C.basis_labels[p - 1], C.basis_labels[p])
    return "\n".join(out)


def parse_complex_json(text: str):
    """Inverse of ``serialize_complex(C, "json")``."""
    doc = json.loads(text)
    n, d = doc["n"], doc["d"]
    if doc["kind"] == "resolution":
        modules = []
        for spec in doc["modules"]:
            M = GradedFreeModule(d, n, spec["index"])
            basis = tuple(HookTableau.parse(s, n) for s in spec["basis"])
            if basis != M.basis or spec["generator_degree"] != M.generator_degree:
                raise ValueError(f"module {spec['index']} does not have the canonical basis")
            modules.append(M)
        diffs = []
        for spec in doc["differentials"]:
            src, tgt = modules[spec["source"]], modules[spec["target"]]
            entries = {}
            for r_lab, c_lab, poly in spec["entries"]:
                key = (tgt.index[HookTableau.parse(r_lab, n)], src.index[HookTableau.parse(c_lab, n)])
                entries[key] = Polynomial.parse(poly, n)
            diffs.append(Differential(src, tgt, PolynomialMatrix(tgt.rank, src.rank, n, entries)))
        aug = []
        for lab, mono in doc["augmentation"]:
            (m, _), = Polynomial.parse(mono, n).terms.items()
            aug.append(m)
        return ResolutionComplex(d, n, tuple(modules), tuple(diffs), tuple(aug))
    if doc["kind"] == "mapping-cone":
        terms, labels = [], []
        for spec in doc["modules"]:
            terms.append(tuple(dcp_mod.ConeSummand(s["q"], tuple(s["S"]), s["rank"], s["base_degree"])
                               for s in spec["summands"]))
            labels.append(tuple(spec["basis"]))
        diffs = []
        for spec in doc["differentials"]:
            p = spec["index"]
            rix = {lab: k for k, lab in enumerate(labels[p - 1])}
            cix = {lab: k for k, lab in enumerate(labels[p])}
            entries = {(rix[r], cix[c]): Polynomial.parse(poly, n) for r, c, poly in spec["entries"]}
            diffs.append(PolynomialMatrix(len(labels[p - 1]), len(labels[p]), n, entries))
        return dcp_mod.ConeComplex(n, d, tuple(terms), tuple(diffs), tuple(labels))
    raise ValueError(f"unknown complex kind {doc['kind']!r}")


if __name__ == "__main__":
    sys.exit(main())
