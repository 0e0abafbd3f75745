"""Command-line interface.

Subcommands: ball, kl, cbasis, mult, afun, dset, decompose, cells,
verify, critical, export.  Every command prints a plain-text rendering
and can also write a JSON report (--json PATH) that embeds the full
resolved configuration; JSON is the stable contract.

Exit codes: 0 for success or a passing verification, 2 when a
verification finds a counterexample (the report is still written),
1 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import afun, cells, dihedral, params, quotient
from .coxeter import INFINITY, CoxeterSystem, WeightFunction
from .errors import FingerprintMismatch, HeckecellsError
from .hecke import HeckeAlgebra

CACHE_ENV = "HECKECELLS_CACHE_DIR"


@dataclass
class RunConfig:
    command: str
    system: tuple | None = None  # (m_rt, m_rs, m_st), "inf" for infinity
    weights: tuple | None = None
    radius: int | None = None
    truncation: int | None = None
    ball_limit: int = 16
    cache_dir: str | None = None
    jobs: int = 1
    json_path: str | None = None
    out: str | None = None
    options: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d = asdict(self)
        if self.system is not None:
            d["system"] = ["inf" if m == INFINITY else m for m in self.system]
        return d


def _parse_triple(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated values, got {text!r}")
    return tuple(INFINITY if p.strip() in ("inf", "oo") else int(p) for p in parts)


def parallel_map(fn, items, jobs: int):
    """Order-preserving map; results are identical for any job count."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


class _Context:
    """Resolved system/algebra plus KL-cache bookkeeping."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        m_rt, m_rs, m_st = cfg.system
        self.system = CoxeterSystem.rank3(m_rs, m_st, m_rt,
                                          ball_radius_limit=cfg.ball_limit)
        self.weights = WeightFunction(tuple(cfg.weights))
        self.algebra = HeckeAlgebra(self.system, self.weights)
        self.cache_notes: list[str] = []
        self._cache_file = None
        if cfg.cache_dir:
            os.makedirs(cfg.cache_dir, exist_ok=True)
            self._cache_file = os.path.join(
                cfg.cache_dir, f"kl_{self.algebra.fingerprint}.jsonl"
            )
            if os.path.exists(self._cache_file):
                try:
                    n = self.algebra.load_kl_cache(self._cache_file)
                    self.cache_notes.append(f"loaded {n} cached KL entries")
                except (FingerprintMismatch, ValueError) as exc:
                    self.cache_notes.append(f"cache rebuilt ({exc})")

    def dset(self) -> cells.DSet:
        return cells.DSet(self.system, self.weights)

    def finish(self) -> dict:
        stats = {
            "kl_columns_solved": self.algebra.kl_columns_solved,
            "kl_columns_loaded": self.algebra.kl_columns_loaded,
            "cache_notes": self.cache_notes,
        }
        if self._cache_file:
            n = self.algebra.save_kl_cache(self._cache_file)
            stats["cache_file"] = self._cache_file
            stats["cache_entries"] = n
        return stats


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    print(text)
    if cfg.json_path:
        report = {"config": cfg.to_json(), **payload}
        with open(cfg.json_path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(report, indent=2, sort_keys=True, default=str) + "\n")


# ---------------------------------------------------------------------- commands


def _cmd_ball(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    ball = [ctx.system.word(x) or "e" for x in ctx.system.ball(cfg.radius)]
    _emit(cfg, {"elements": ball, "count": len(ball)},
          f"ball({cfg.radius}): {len(ball)} elements\n" + " ".join(ball))
    return 0


def _cmd_kl(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    y = ctx.system.element(cfg.options["y"])
    w = ctx.system.element(cfg.options["w"])
    p = ctx.algebra.kl_poly(y, w)
    stats = ctx.finish()
    _emit(cfg, {"p": p.to_pairs(), "stats": stats},
          f"p[{cfg.options['y'] or 'e'}, {cfg.options['w'] or 'e'}] = {p}")
    return 0


def _cmd_cbasis(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    w = ctx.system.element(cfg.options["w"])
    c = ctx.algebra.c_basis(w)
    stats = ctx.finish()
    payload = {
        "coords": {ctx.system.word(x) or "e": p.to_pairs()
                   for x, p in sorted(c.coords.items())},
        "stats": stats,
    }
    _emit(cfg, payload, f"C[{cfg.options['w'] or 'e'}] = {c.render(ctx.system)}")
    return 0


def _cmd_mult(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    x = ctx.system.element(cfg.options["x"])
    y = ctx.system.element(cfg.options["y"])
    z = ctx.system.mult(x, y)
    _emit(cfg, {"product": ctx.system.word(z) or "e"},
          ctx.system.word(z) or "e")
    return 0


def _cmd_afun(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    w = ctx.system.element(cfg.options["w"])
    dset = ctx.dset()
    a_pred = dset.a_pred(w)
    delta, n_w = afun.delta_n(ctx.algebra, w)
    sweep = afun.HSweep(ctx.algebra, cfg.radius, afun.PredictedA(dset))
    value, wit = sweep.a_ball(w)
    stats = ctx.finish()
    wit_words = None if wit is None else [ctx.system.word(v) or "e" for v in wit]
    payload = {
        "a_ball": value, "witness": wit_words, "a_pred": a_pred,
        "delta": delta, "n_w": n_w, "stats": stats,
    }
    _emit(cfg, payload,
          f"a_ball({cfg.options['w']}, R={cfg.radius}) = {value} witness={wit_words}\n"
          f"a_pred = {a_pred}, Delta = {delta}, n_w = {n_w}")
    return 0


def _cmd_dset(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    levels = params.d_levels(ctx.system, ctx.weights)
    lines = [f"D_{lvl} = {{{', '.join(words)}}}" for lvl, words in levels.items()]
    _emit(cfg, {"levels": {str(k): v for k, v in levels.items()}}, "\n".join(lines))
    return 0


def _cmd_decompose(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    w = ctx.system.element(cfg.options["w"])
    dset = ctx.dset()
    b, d, y = dset.decompose(w)
    words = {k: ctx.system.word(v) or "e" for k, v in (("b", b), ("d", d), ("y", y))}
    _emit(cfg, {"decomposition": words, "level": dset.a_pred(w)},
          f"{cfg.options['w'] or 'e'} = b*d*y with b={words['b']} d={words['d']} "
          f"y={words['y']} (level {dset.a_pred(w)})")
    return 0


def _cmd_cells(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    dset = ctx.dset()
    graph = cells.cell_graph(ctx.algebra, cfg.radius, cfg.options["flavor"])
    rows = []
    for w in ctx.system.ball(cfg.radius):
        b, d, y = dset.decompose(w)
        rows.append({
            "word": ctx.system.word(w) or "e",
            "length": ctx.system.length(w),
            "a_pred": dset.a_pred(w),
            "d": ctx.system.word(d) or "e",
            "b": ctx.system.word(b) or "e",
            "y": ctx.system.word(y) or "e",
            "cell_id": graph.scc_index[w],
        })
    stats = ctx.finish()
    header = "word,length,a_pred,d,b,y,cell_id"
    body = "\n".join(
        f"{r['word']},{r['length']},{r['a_pred']},{r['d']},{r['b']},{r['y']},{r['cell_id']}"
        for r in rows
    )
    csv_text = header + "\n" + body + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    _emit(cfg, {"rows": rows, "stats": stats},
          csv_text if not cfg.out else f"wrote {len(rows)} rows to {cfg.out}")
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    check = cfg.options["check"]
    if check.startswith("P"):
        return _verify_P(cfg, int(check[1:]))
    if check == "bound":
        return _verify_bound(cfg)
    if check == "strict":
        return _verify_strict(cfg)
    if check == "expansion":
        return _verify_expansion(cfg)
    if check == "dihedral":
        return _verify_dihedral(cfg)
    if check == "length":
        return _verify_length(cfg)
    raise HeckecellsError(f"unknown check {check!r}")


def _verify_P(cfg: RunConfig, k: int) -> int:
    ctx = _Context(cfg)
    if ctx.system.is_finite():
        a_of = afun.ExactA(afun.exact_a_table(ctx.algebra))
    else:
        a_of = afun.PredictedA(ctx.dset())
    cert = cfg.options.get("cert_radius") or cfg.radius + 3
    report = afun.check_P(k, ctx.algebra, a_of, cfg.radius, cert_radius=cert)
    stats = ctx.finish()
    _emit(cfg, {"report": report.to_json(), "a_source": a_of.kind, "stats": stats},
          f"P{k} on ball({cfg.radius}) [{a_of.kind} a-values]: {report.result}"
          + (f"\n  counterexample: {report.counterexample}"
             if report.counterexample else ""))
    return 0 if report.passed else 2


def _verify_bound(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    trunc = quotient.TruncatedAlgebra(ctx.algebra, ctx.dset(), cfg.truncation)
    rep = trunc.check_bound(cfg.radius)
    stats = ctx.finish()
    _emit(cfg, {"report": rep, "stats": stats},
          f"bound check N={cfg.truncation} R={cfg.radius}: "
          f"{'pass' if rep['passed'] else rep['counterexample']}")
    return 0 if rep["passed"] else 2


def _verify_strict(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    dset = ctx.dset()
    d = ctx.system.element(cfg.options["d"])
    trunc = quotient.TruncatedAlgebra(ctx.algebra, dset, dset.level_of(d))
    rep = trunc.check_strict(d, cfg.radius)
    stats = ctx.finish()
    _emit(cfg, {"report": rep, "stats": stats},
          f"strict check d={cfg.options['d']} R={cfg.radius}: "
          f"{'pass' if rep['passed'] else rep['counterexample']}")
    return 0 if rep["passed"] else 2


def _verify_expansion(cfg: RunConfig) -> int:
    case_id = cfg.options.get("case")
    ids = [case_id] if case_id else quotient.all_expansion_case_ids()
    reports = parallel_map(quotient.verify_expansion, ids, cfg.jobs)
    failures = [r for r in reports if not r.passed]
    lines = [f"{r.case_id}: {'pass' if r.passed else 'FAIL'} "
             f"({r.samples_run} samples)" for r in reports]
    _emit(cfg, {"reports": [r.to_json() for r in reports]}, "\n".join(lines))
    return 0 if not failures else 2


def _verify_dihedral(cfg: RunConfig) -> int:
    lemma = cfg.options.get("lemma")
    m = cfg.options.get("m")
    if lemma and m is not None:
        weights = cfg.options.get("dweights") or (1, 1)
        reports = [dihedral.dihedral_sweep(m, weights, lemma)]
    else:
        lemmas = (lemma,) if lemma else dihedral.LEMMA_IDS
        reports = list(dihedral.sweep_grid(lemmas=lemmas))
    failures = [r for r in reports if not r.passed]
    lines = [
        f"{r.lemma} m={'inf' if r.m == INFINITY else r.m} L={r.weights}: "
        f"{'pass' if r.passed else 'FAIL'}"
        + (f" [{r.note}]" if r.note else "")
        for r in reports
    ]
    _emit(cfg, {"reports": [r.to_json() for r in reports]}, "\n".join(lines))
    return 0 if not failures else 2


def _verify_length(cfg: RunConfig) -> int:
    ctx = _Context(cfg)
    dset = ctx.dset()
    reports = {}
    ok = True
    for entry in dset.entries:
        rep = dset.length_additivity_check(entry.element, cfg.radius)
        reports[entry.symbol] = rep
        ok = ok and rep["passed"]
    lines = [f"{sym}: {'pass' if rep['passed'] else rep['counterexample']}"
             for sym, rep in reports.items()]
    _emit(cfg, {"reports": reports}, "\n".join(lines))
    return 0 if ok else 2


def _cmd_critical(cfg: RunConfig) -> int:
    mode = cfg.options["mode"]
    m = cfg.options["m"]
    if mode == "1d":
        vals = params.critical_values_1d(m, cfg.options["k"])
        _emit(cfg, {"values": [str(v) for v in vals]},
              " ".join(str(v) for v in vals))
        return 0
    n = cfg.options["n"]
    if mode == "triples":
        pts = params.triple_points(m, n)
        payload = {"points": [p.to_json() for p in pts]}
        text = "\n".join(
            f"({p.x}, {p.y}): {{{', '.join(p.symbols)}}} at level {p.level}"
            for p in pts
        )
        _emit(cfg, payload, text)
        return 0
    loci = params.critical_lines_2d(m, n)
    payload = {"loci": [rec.to_json() for rec in loci]}
    text = "\n".join(
        f"{rec.d1},{rec.d2} [{';'.join(rec.chamber)}]: "
        f"{'critical' if rec.critical else 'non-critical'}"
        for rec in loci
    )
    _emit(cfg, payload, text)
    return 0


def _cmd_export(cfg: RunConfig) -> int:
    m, n = cfg.options["m"], cfg.options["n"]
    loci = params.critical_lines_2d(m, n)
    points = [
        (chr(ord("A") + i), p.x, p.y)
        for i, p in enumerate(params.triple_points(m, n))
    ]
    params.export_arrangement(loci, cfg.options["format"], cfg.out,
                              m=m, n=n, points=points)
    _emit(cfg, {"written": cfg.out, "loci": len(loci)},
          f"wrote {len(loci)} loci to {cfg.out}")
    return 0


# ---------------------------------------------------------------------- parser


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="heckecells",
        description="exact unequal-parameter Hecke-algebra data for rank-3 "
                    "weighted Coxeter systems",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def with_system(p, radius_default=None):
        p.add_argument("--system", required=True,
                       help="m_rt,m_rs,m_st (e.g. 2,4,5; inf allowed)")
        p.add_argument("--weights", required=True,
                       help="L(r),L(s),L(t) (e.g. 5,1,1)")
        p.add_argument("--ball-limit", type=int, default=16)
        p.add_argument("--cache-dir",
                       default=os.environ.get(CACHE_ENV) or None)
        if radius_default is not None:
            p.add_argument("--radius", type=int, default=radius_default)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--json", dest="json_path", default=None)

    p = sub.add_parser("ball", help="list the elements of a Cayley ball")
    with_system(p, radius_default=4)

    p = sub.add_parser("kl", help="one Kazhdan-Lusztig polynomial")
    with_system(p)
    p.add_argument("--y", required=True)
    p.add_argument("--w", required=True)

    p = sub.add_parser("cbasis", help="KL basis element in T-coordinates")
    with_system(p)
    p.add_argument("--w", required=True)

    p = sub.add_parser("mult", help="product of two group elements")
    with_system(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = sub.add_parser("afun", help="ball a-value, prediction, Delta, n_w")
    with_system(p, radius_default=4)
    p.add_argument("--w", required=True)

    p = sub.add_parser("dset", help="distinguished elements by level")
    with_system(p)

    p = sub.add_parser("decompose", help="the unique b*d*y decomposition")
    with_system(p)
    p.add_argument("--w", required=True)

    p = sub.add_parser("cells", help="element-to-cell table (CSV)")
    with_system(p, radius_default=5)
    p.add_argument("--flavor", choices=("left", "right", "twosided"),
                   default="right")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run one verification suite")
    checks = [f"P{i}" for i in range(1, 16)] + [
        "bound", "strict", "expansion", "dihedral", "length"]
    p.add_argument("--check", required=True, choices=checks)
    p.add_argument("--system", default=None)
    p.add_argument("--weights", default=None)
    p.add_argument("--radius", type=int, default=6)
    p.add_argument("--cert-radius", type=int, default=None)
    p.add_argument("--truncation", type=int, default=None)
    p.add_argument("--ball-limit", type=int, default=16)
    p.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV) or None)
    p.add_argument("--d", default=None, help="distinguished element word")
    p.add_argument("--case", default=None, help="expansion case id")
    p.add_argument("--lemma", default=None, help="dihedral lemma id")
    p.add_argument("--m", default=None, help="dihedral bond (int or inf)")
    p.add_argument("--dweights", default=None, help="dihedral weights Ls,Lt")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", dest="json_path", default=None)

    p = sub.add_parser("critical", help="critical values / lines / triples")
    p.add_argument("--mode", choices=("1d", "2d", "triples"), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="m_st for 1d mode")
    p.add_argument("--n", type=int, default=None, help="m_st/2 for 2d modes")
    p.add_argument("--json", dest="json_path", default=None)

    p = sub.add_parser("export", help="write an arrangement file")
    p.add_argument("--what", choices=("arrangement",), default="arrangement")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("svg", "csv", "json"), required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--json", dest="json_path", default=None)

    return top


_HANDLERS = {
    "ball": _cmd_ball,
    "kl": _cmd_kl,
    "cbasis": _cmd_cbasis,
    "mult": _cmd_mult,
    "afun": _cmd_afun,
    "dset": _cmd_dset,
    "decompose": _cmd_decompose,
    "cells": _cmd_cells,
    "verify": _cmd_verify,
    "critical": _cmd_critical,
    "export": _cmd_export,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1

    try:
        cfg = RunConfig(command=ns.command)
        for name in ("radius", "truncation", "jobs", "out"):
            if hasattr(ns, name) and getattr(ns, name) is not None:
                setattr(cfg, name, getattr(ns, name))
        if getattr(ns, "ball_limit", None):
            cfg.ball_limit = ns.ball_limit
        cfg.cache_dir = getattr(ns, "cache_dir", None)
        cfg.json_path = getattr(ns, "json_path", None)
        if getattr(ns, "system", None):
            cfg.system = _parse_triple(ns.system)
        if getattr(ns, "weights", None):
            cfg.weights = tuple(int(v) for v in ns.weights.split(","))
        for name in ("y", "w", "x", "flavor", "check", "case", "lemma",
                     "mode", "k", "n", "cert_radius"):
            if hasattr(ns, name) and getattr(ns, name) is not None:
                cfg.options[name] = getattr(ns, name)
        if cfg.command == "critical":
            cfg.options["m"] = ns.m
            if ns.mode == "1d" and ns.k is None:
                parser.error("--k is required for 1d mode")
            if ns.mode in ("2d", "triples") and ns.n is None:
                parser.error("--n is required for 2d/triples mode")
        if cfg.command == "export":
            cfg.options.update({"m": ns.m, "n": ns.n, "format": ns.format})
        if cfg.command == "verify":
            if getattr(ns, "m", None) is not None:
                cfg.options["m"] = INFINITY if ns.m in ("inf", "oo") else int(ns.m)
            if getattr(ns, "dweights", None):
                cfg.options["dweights"] = tuple(
                    int(v) for v in ns.dweights.split(","))
            needs_system = cfg.options["check"].startswith("P") or \
                cfg.options["check"] in ("bound", "strict", "length")
            if needs_system and (cfg.system is None or cfg.weights is None):
                parser.error("--system and --weights are required for this check")
            if cfg.options["check"] == "bound" and cfg.truncation is None:
                parser.error("--truncation is required for the bound check")
            if cfg.options["check"] == "strict" and not cfg.options.get("d"):
                parser.error("--d is required for the strict check")
        return _HANDLERS[cfg.command](cfg)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    except HeckecellsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
