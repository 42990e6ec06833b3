"""Command line surface.

Subcommands: check (certify one triple), expand (run one expansion with
optional checkpointing), cofactors (minimal co-factor set for a shape),
table (reproduce the summary tables), family (verify the parametric
families).  Exit codes: 0 success, 1 usage or unreadable input, 2 step
budget exhausted with a lower bound emitted, 3 internal invariant
violation.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cofactor import cyclotomic_excluded, minimal_cofactor_set
from .expansion import (DEFAULT_CHECKPOINT_INTERVAL, Expansion,
                        InternalCheckError, PrecisionError,
                        VerificationError, Engine, expand, open_state_file,
                        resume_engine)
from .families import (large_trace_instance, scan_family_variants,
                       verify_large_period)
from .intpoly import discriminant
from .salem import certify, heuristic_constant, refine_beta, truncate

DIGIT_DISPLAY_CAP = 10_000

# Trace <= 10 sextic Salem triples whose expansions resisted the first
# published desk search; row order is trace ascending, then b ascending.
LARGE_EXPANSION_TARGETS = (
    (-3, -1, -7),
    (-5, -2, -11),
    (-6, -26, -39),
    (-6, -21, -31),
    (-7, -29, -43),
    (-7, -28, -41),
    (-8, -33, -49),
    (-8, -30, -44),
    (-8, -26, -38),
    (-8, -23, -34),
    (-8, -3, -17),
    (-9, -35, -51),
    (-9, -28, -41),
    (-9, -6, -20),
    (-10, -41, -61),
    (-10, -40, -59),
    (-10, -36, -52),
    (-10, -4, -21),
)


@dataclass
class RunConfig:
    eps: str = "5e-64"
    checkpoint_interval: int = DEFAULT_CHECKPOINT_INTERVAL
    max_steps: int = 1_000_000
    threads: int = 1
    state_file: str = None
    output_format: str = "human"

    def eps_fraction(self) -> Fraction:
        return Fraction(self.eps)

    def validate(self):
        if self.eps_fraction() <= 0:
            raise ValueError("eps must be positive")
        if self.checkpoint_interval < 1:
            raise ValueError("checkpoint interval must be >= 1")
        if self.max_steps < 1:
            raise ValueError("max-steps must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the exit-code contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _emit(line=""):
    print(line)


def _jline(obj):
    print(json.dumps(obj, sort_keys=True))


def _config_from(args) -> RunConfig:
    cfg = RunConfig()
    # 0 must reach validate() and be rejected, not fall back to a default
    if getattr(args, "eps", None) is not None:
        cfg.eps = args.eps
    if getattr(args, "checkpoint_interval", None) is not None:
        cfg.checkpoint_interval = args.checkpoint_interval
    if getattr(args, "max_steps", None) is not None:
        cfg.max_steps = args.max_steps
    if getattr(args, "threads", None) is not None:
        cfg.threads = args.threads
    cfg.state_file = getattr(args, "state_file", None)
    cfg.output_format = getattr(args, "format", "human")
    cfg.validate()
    return cfg


def _pmap(fn, items, threads):
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    cfg = _config_from(args)
    t = certify(args.a, args.b, args.c)
    row = {"a": t.a, "b": t.b, "c": t.c, "salem": t.is_salem,
           "trace": t.trace, "disc": discriminant(t.poly()),
           "cyclotomic_excluded": cyclotomic_excluded(t)}
    if t.is_salem:
        # enclosure far below the display grid, then exact truncation
        enc = refine_beta((t.a, t.b, t.c), Fraction(1, 10 ** 15))
        row["beta"] = _truncate_fraction(enc.lo, 10)
        row["C"] = str(truncate(heuristic_constant(t.a, t.b, t.c), 4))
    else:
        row["beta"] = None
        row["C"] = None
    if cfg.output_format == "json-lines":
        _jline(row)
    elif cfg.output_format == "tsv":
        _emit("\t".join(str(row[k]) for k in
                        ("a", "b", "c", "salem", "beta", "trace", "disc",
                         "C", "cyclotomic_excluded")))
    else:
        _emit("triple: (%d, %d, %d)" % (t.a, t.b, t.c))
        _emit("salem: %s" % ("yes" if t.is_salem else "no"))
        if t.is_salem:
            _emit("beta: %s" % row["beta"])
        _emit("trace: %d" % row["trace"])
        _emit("disc: %d" % row["disc"])
        if t.is_salem:
            _emit("C: %s" % row["C"])
        _emit("cyclotomic_excluded: %s"
              % ("yes" if row["cyclotomic_excluded"] else "no"))
    return 0


def _truncate_fraction(x: Fraction, places: int) -> str:
    scaled = (x.numerator * 10 ** places) // x.denominator
    s = str(scaled)
    if len(s) <= places:
        s = "0" * (places + 1 - len(s)) + s
    return s[:-places] + "." + s[-places:]


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------


def _digit_text(exp: Expansion, full: bool):
    shown = exp.digits if full else exp.digits[:DIGIT_DISPLAY_CAP]
    omitted = len(exp.digits) - len(shown)
    head = ",".join(str(d) for d in shown[: exp.m])
    tail = ",".join(str(d) for d in shown[exp.m:])
    text = "%s : %s" % (head, tail)
    if omitted:
        text += ",... (+%d more)" % omitted
    return text, omitted


def cmd_expand(args) -> int:
    cfg = _config_from(args)
    t = certify(args.a, args.b, args.c)
    if not t.is_salem:
        print("expand: (%d, %d, %d) is not a Salem triple"
              % (args.a, args.b, args.c), file=sys.stderr)
        return 1
    engine = None
    fh = None
    if cfg.state_file:
        try:
            engine, fh = _engine_for_state_file(cfg, t)
        except (VerificationError, OSError, ValueError) as exc:
            print("expand: checkpoint: %s" % exc, file=sys.stderr)
            return 1
    try:
        got = expand((t.a, t.b, t.c), max_steps=cfg.max_steps,
                     eps=cfg.eps_fraction(),
                     checkpoint_interval=cfg.checkpoint_interval,
                     engine=engine)
    finally:
        if fh is not None:
            fh.close()
    if isinstance(got, Expansion):
        text, omitted = _digit_text(got, args.full_digits)
        if cfg.output_format == "json-lines":
            row = {"a": t.a, "b": t.b, "c": t.c, "m": got.m, "p": got.p,
                   "digits": list(got.digits[:None if args.full_digits
                                             else DIGIT_DISPLAY_CAP])}
            if omitted:
                row["digits_truncated"] = True
            _jline(row)
        elif cfg.output_format == "tsv":
            cell = ",".join(map(str, got.digits)) if not omitted else "-"
            _emit("%d\t%d\t%s" % (got.m, got.p, cell))
        else:
            _emit("m=%d p=%d" % (got.m, got.p))
            _emit("digits: %s" % text)
        return 0
    # only the newest record is shown; the in-memory history depends on
    # where a run was interrupted, the final maximum does not
    if cfg.output_format == "json-lines":
        _jline({"a": t.a, "b": t.b, "c": t.c, "bound": got.record_index,
                "record_value_bits": got.record_value.bit_length(),
                "steps": got.steps})
    elif cfg.output_format == "tsv":
        _emit("*\t*\t%d" % got.record_index)
    else:
        _emit("record: n=%d |L|~2^%d"
              % (got.record_index, got.record_value.bit_length() - 1))
        _emit("m+p > %d" % got.record_index)
    return 2


def _engine_for_state_file(cfg: RunConfig, t):
    """Resume from cfg.state_file if it holds a run for `t`, else start a
    fresh checkpointed engine writing to it."""
    path = cfg.state_file
    if os.path.exists(path) and os.path.getsize(path) > 0:
        engine, fh = resume_engine(path)
        if engine.poly != t.poly():
            fh.close()
            raise VerificationError(
                "state file %s belongs to %s" % (path, engine.poly))
        return engine, fh
    engine = Engine((t.a, t.b, t.c), eps=cfg.eps_fraction(),
                    checkpoint_interval=cfg.checkpoint_interval)
    fh = open_state_file(path, engine)
    return engine, fh


# ---------------------------------------------------------------------------
# cofactors
# ---------------------------------------------------------------------------


def cmd_cofactors(args) -> int:
    cfg = _config_from(args)
    if cfg.output_format == "human" and not (args.m == 1 and 5 <= args.p <= 10):
        _emit("mode: exploratory (certified coverage is m=1, 5 <= p <= 10)")
    stats = {}
    confirmed, unresolved = minimal_cofactor_set(
        6, args.m, args.p, stats=stats, witness_step_cap=args.witness_cap)
    reports = stats["reports"]
    if cfg.output_format == "json-lines":
        for cand in reports:
            _jline({"q": list(cand.q.coeffs), "disk": cand.disk,
                    "feasible": cand.feasible,
                    "witness": None if cand.witness is None else
                    [cand.witness.a, cand.witness.b, cand.witness.c],
                    "status": "confirmed" if cand.witness is not None
                    else "unresolved"})
    elif cfg.output_format == "tsv":
        for cand in reports:
            status = "confirmed" if cand.witness is not None else "unresolved"
            _emit("%s\t%s" % (status, cand.report_line()))
    else:
        _emit("confirmed (%d):" % len(confirmed))
        for cand in reports:
            if cand.witness is not None:
                _emit(cand.report_line())
        _emit("unresolved (%d):" % len(unresolved))
        for cand in reports:
            if cand.witness is None:
                _emit(cand.report_line())
        _emit("stages: box=%d disk_k2=%d disk_13_8=%d phi_closed=%d "
              "feasible=%d" % (stats.get("box", 0), stats.get("disk_k2", 0),
                               stats.get("disk_13_8", 0),
                               stats.get("phi_closed", 0),
                               stats.get("parry_feasible", 0)))
    return 0 if not unresolved else 2


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def cmd_table(args) -> int:
    cfg = _config_from(args)
    if args.which == "lambda":
        return _table_lambda(args, cfg)
    return _table_largeexp(args, cfg)


def _table_lambda(args, cfg: RunConfig) -> int:
    rows = []
    bad = False
    for p in range(5, args.pmax + 1):
        confirmed, unresolved = minimal_cofactor_set(
            6, 1, p, witness_step_cap=args.witness_cap)
        rows.append((p, confirmed, unresolved))
        bad = bad or bool(unresolved)
    for p, confirmed, unresolved in rows:
        names = "; ".join(str(q) for q in confirmed)
        if unresolved:
            names += " !unresolved: " + "; ".join(str(q) for q in unresolved)
        if cfg.output_format == "json-lines":
            _jline({"p": p, "cofactors": [list(q.coeffs) for q in confirmed],
                    "unresolved": [list(q.coeffs) for q in unresolved]})
        elif cfg.output_format == "tsv":
            _emit("%d\t%s" % (p, names))
        else:
            _emit("(1, %d): %s" % (p, names))
    return 2 if bad else 0


def _largeexp_row(job):
    triple, max_steps, eps, interval = job
    got = expand(triple, max_steps=max_steps, eps=Fraction(eps),
                 checkpoint_interval=interval)
    if isinstance(got, Expansion):
        return {"triple": triple, "m": got.m, "p": got.p, "bound": None}
    return {"triple": triple, "m": None, "p": None,
            "bound": got.record_index}


def _table_largeexp(args, cfg: RunConfig) -> int:
    targets = [t for t in LARGE_EXPANSION_TARGETS if -t[0] <= args.max_trace]
    jobs = [(t, cfg.max_steps, cfg.eps, cfg.checkpoint_interval)
            for t in targets]
    rows = _pmap(_largeexp_row, jobs, cfg.threads)
    for row in rows:
        a, b, c = row["triple"]
        if cfg.output_format == "json-lines":
            _jline({"a": a, "b": b, "c": c, "m": row["m"], "p": row["p"],
                    "bound": row["bound"]})
            continue
        if row["m"] is not None:
            cells = (str(row["m"]), str(row["p"]), "N/A")
        else:
            cells = ("*", "*", str(row["bound"]))
        if cfg.output_format == "tsv":
            _emit("%d,%d,%d\t%s\t%s\t%s" % (a, b, c, *cells))
        else:
            if row["m"] is not None:
                _emit("(%d, %d, %d): m=%s p=%s" % (a, b, c, cells[0],
                                                   cells[1]))
            else:
                _emit("(%d, %d, %d): m+p > %s" % (a, b, c, cells[2]))
    return 0


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def cmd_family(args) -> int:
    cfg = _config_from(args)
    if args.kind == "large-period":
        return _family_large_period(args, cfg)
    if args.kind == "large-trace":
        return _family_large_trace(args, cfg)
    return _family_variant_scan(args, cfg)


def _family_large_period(args, cfg: RunConfig) -> int:
    rep = verify_large_period(args.k, eps=cfg.eps_fraction())
    fam = rep.family
    obs = rep.observed
    obs_shape = ((obs.m, obs.p) if isinstance(obs, Expansion)
                 else ("budget", "exhausted"))
    if cfg.output_format == "json-lines":
        _jline({"k": args.k, "a": fam.a, "passed": rep.passed,
                "predicted": [fam.predicted.m, fam.predicted.p],
                "observed": list(obs_shape),
                "first_mismatch": rep.first_mismatch})
    else:
        _emit("k=%d triple=(%d, %d, %d)" % (args.k, fam.triple.a,
                                            fam.triple.b, fam.triple.c))
        _emit("predicted (m, p) = (%d, %d); observed (%s, %s)"
              % (fam.predicted.m, fam.predicted.p, *obs_shape))
        _emit("digits: %s" % ("match" if rep.digits_ok else
                              "MISMATCH at position %s" % rep.first_mismatch))
        _emit("cofactor: %s" % ("match" if rep.cofactor_ok else "MISMATCH"))
        _emit("interior pattern: %s" % ("match" if rep.interior_ok
                                        else "MISMATCH"))
        _emit("result: %s" % ("pass" if rep.passed else "FAIL"))
    if rep.passed:
        return 0
    print("family: large-period k=%d failed (first mismatching index: %s)"
          % (args.k, rep.first_mismatch), file=sys.stderr)
    return 3


def _family_large_trace(args, cfg: RunConfig) -> int:
    # VerificationError subclasses ValueError; order matters
    try:
        inst = large_trace_instance(args.a)
    except VerificationError as exc:
        print("family: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("family: %s" % exc, file=sys.stderr)
        return 1
    text, _ = _digit_text(inst.expansion, True)
    if cfg.output_format == "json-lines":
        _jline({"a": inst.a, "m": inst.expansion.m, "p": inst.expansion.p,
                "C": str(truncate(inst.constant, 4)),
                "digits": list(inst.expansion.digits)})
    else:
        _emit("a=%d triple=(%d, %d, -2)" % (inst.a, inst.a, inst.a + 1))
        _emit("m=%d p=%d (m+p=6)" % (inst.expansion.m, inst.expansion.p))
        _emit("digits: %s" % text)
        _emit("C: %s" % truncate(inst.constant, 4))
        _emit("result: pass")
    return 0


def _variant_row(job):
    k, offset, max_steps, eps = job
    rows = scan_family_variants((k,), offset, max_steps=max_steps)
    return rows[0]


def _family_variant_scan(args, cfg: RunConfig) -> int:
    jobs = [(k, args.offset, cfg.max_steps, cfg.eps)
            for k in range(2, args.kmax + 1)]
    rows = _pmap(_variant_row, jobs, cfg.threads)
    for row in rows:
        if isinstance(row.observed, Expansion):
            shape = "(m, p) = (%d, %d)" % (row.observed.m, row.observed.p)
        elif row.observed is None:
            shape = "not salem"
        else:
            shape = "m+p > %d" % row.observed.record_index
        verdict = "matches (1, %d)" % (8 * row.k + 6) if row.matches_pattern \
            else "no match"
        if cfg.output_format == "json-lines":
            _jline({"k": row.k, "a": row.a, "salem": row.salem_ok,
                    "observed": shape, "matches_pattern": row.matches_pattern})
        else:
            _emit("k=%d a=%d: %s -> %s" % (row.k, row.a, shape, verdict))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(sp, max_steps=None):
    sp.add_argument("--eps", default=None,
                    help="working tolerance, decimal string (default 5e-64)")
    sp.add_argument("--checkpoint-interval", type=int, default=None,
                    metavar="N", help="state snapshot spacing (default 1e7)")
    sp.add_argument("--threads", type=int, default=None,
                    help="parallel workers for independent items")
    sp.add_argument("--format", choices=("human", "tsv", "json-lines"),
                    default="human")
    if max_steps is not None:
        sp.add_argument("--max-steps", type=int, default=max_steps,
                        metavar="N", help="step budget (default %d)"
                        % max_steps)


def build_parser() -> _Parser:
    ap = _Parser(prog="salembeta", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    sp = sub.add_parser("check", help="certify a coefficient triple")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("c", type=int)
    _add_common(sp)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("expand", help="run one greedy expansion")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("c", type=int)
    sp.add_argument("--state-file", metavar="PATH",
                    help="checkpoint file; resumed when it already exists")
    sp.add_argument("--full-digits", action="store_true",
                    help="print every digit (default caps at %d)"
                    % DIGIT_DISPLAY_CAP)
    _add_common(sp, max_steps=1_000_000)
    sp.set_defaults(fn=cmd_expand)

    sp = sub.add_parser("cofactors",
                        help="minimal co-factor set for shape (m, p)")
    sp.add_argument("m", type=int)
    sp.add_argument("p", type=int)
    sp.add_argument("--witness-cap", type=int, default=100_000,
                    metavar="N", help="witness search step budget")
    _add_common(sp)
    sp.set_defaults(fn=cmd_cofactors)

    sp = sub.add_parser("table", help="reproduce a summary table")
    sp.add_argument("which", choices=("lambda", "largeexp"))
    sp.add_argument("--pmax", type=int, default=10,
                    help="largest period for the lambda table")
    sp.add_argument("--max-trace", type=int, default=10,
                    help="trace bound for the largeexp table")
    sp.add_argument("--witness-cap", type=int, default=100_000, metavar="N")
    _add_common(sp, max_steps=5_000_000)
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("family", help="verify a parametric family")
    sp.add_argument("kind", choices=("large-period", "large-trace",
                                     "variant-scan"))
    sp.add_argument("--k", type=int, default=2,
                    help="parameter for large-period")
    sp.add_argument("--a", type=int, default=-2,
                    help="parameter for large-trace (even, <= -2)")
    sp.add_argument("--offset", type=int, choices=(-4, -5), default=-4,
                    help="variant-scan family offset")
    sp.add_argument("--kmax", type=int, default=4,
                    help="variant-scan upper parameter")
    _add_common(sp, max_steps=500_000)
    sp.set_defaults(fn=cmd_family)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (InternalCheckError, PrecisionError, AssertionError) as exc:
        print("internal invariant violation: %s" % exc, file=sys.stderr)
        return 3
    except VerificationError as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        # bad parameter combinations surface as usage errors
        ap.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
