"""Command-line front end: ``fthresh COMMAND PROBLEM.json [flags]``.

A problem file is a JSON document::

    {
      "cone": {"rays": [[1, 0, 0], [0, 1, 0], [-1, 0, 1], [0, -1, 1]]},
      "ideals": {"a": {"generators": [[1, 1, 2]]}},
      "p": 2, "e_max": 3, "budget": 100000
    }

The name ``m`` refers to the maximal monomial ideal unless the file defines
it.  Results go to stdout as JSON with rationals written ``"num/den"``.
Exit status: 0 success, 1 validation error, 2 budget exhausted or partial.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import kernel as K
from .cones import DualPair, gorenstein_data, is_simplicial, is_smooth
from .errors import EnumerationBoundExceeded, FthreshError, OracleBudgetExceeded
from .ideals import MonomialIdeal, make_ideal, maximal_monomial_ideal
from .oracle import NuQuery, OracleConfig, convergence_table, nu_search
from . import thresholds as T

COMMANDS = ("dual", "hilbert", "gorenstein", "fpt", "fthreshold", "testideal",
            "jumping", "nu", "report", "regularity")
EXIT_OK, EXIT_INVALID, EXIT_PARTIAL = 0, 1, 2


class ProblemFileError(FthreshError, ValueError):
    pass


@dataclass
class ProblemFile:
    dp: DualPair
    ideals: dict
    p: int | None = None
    e_max: int | None = None
    budget: int | None = None
    raw: dict = field(default_factory=dict)

    def ideal(self, name: str) -> MonomialIdeal:
        if name in self.ideals:
            return self.ideals[name]
        if name == "m":
            return maximal_monomial_ideal(self.dp)
        raise ProblemFileError(f"ideals.{name}: no ideal with this name")


def _int_vectors(value, where):
    if not isinstance(value, list) or not value:
        raise ProblemFileError(f"{where}: expected a nonempty list of integer vectors")
    out = []
    for k, vec in enumerate(value):
        if not isinstance(vec, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in vec):
            raise ProblemFileError(f"{where}[{k}]: expected a list of integers")
        out.append(tuple(vec))
    return out


def _opt_int(doc, key):
    val = doc.get(key)
    if val is not None and (not isinstance(val, int) or isinstance(val, bool)):
        raise ProblemFileError(f"{key}: expected an integer")
    return val


def parse_problem(doc) -> ProblemFile:
    """Validate a decoded problem document, including every ideal exponent."""
    if not isinstance(doc, dict):
        raise ProblemFileError("<root>: expected a JSON object")
    cone = doc.get("cone")
    if not isinstance(cone, dict) or "rays" not in cone:
        raise ProblemFileError("cone.rays: missing")
    rays = _int_vectors(cone["rays"], "cone.rays")
    if len({len(r) for r in rays}) != 1:
        raise ProblemFileError("cone.rays: vectors have different lengths")
    try:
        dp = DualPair(rays)
    except FthreshError as exc:
        raise ProblemFileError(f"cone.rays: {exc}") from exc
    ideals_doc = doc.get("ideals", {})
    if not isinstance(ideals_doc, dict):
        raise ProblemFileError("ideals: expected an object mapping names to ideals")
    ideals = {}
    for name, entry in ideals_doc.items():
        where = f"ideals.{name}.generators"
        if not isinstance(entry, dict) or "generators" not in entry:
            raise ProblemFileError(f"{where}: missing")
        gens = _int_vectors(entry["generators"], where)
        try:
            ideals[name] = make_ideal(dp, gens)
        except FthreshError as exc:
            raise ProblemFileError(f"{where}: {exc}") from exc
    return ProblemFile(dp, ideals, _opt_int(doc, "p"), _opt_int(doc, "e_max"),
                       _opt_int(doc, "budget"), doc)


def load_problem(path: str) -> ProblemFile:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"<file>: not valid JSON ({exc})") from exc
    return parse_problem(doc)


# ------------------------------------------------------------ serialization

def _rat(x) -> str:
    return K.fmt_rational(x)


def _vec(v) -> list:
    return [_rat(x) for x in v]


def _ivecs(vs) -> list:
    return [list(int(x) for x in v) for v in vs]


def _threshold(tv: T.ThresholdValue) -> dict:
    return {"value": _rat(tv.value), "witness": _vec(tv.witness), "method": tv.method}


# ------------------------------------------------------------------ commands

def _cmd_dual(pf, args):
    dp = pf.dp
    return {"sigma_rays": _ivecs(dp.sigma.rays), "dual_rays": _ivecs(dp.u),
            "simplicial": is_simplicial(dp.sigma), "smooth": is_smooth(dp.sigma)}


def _cmd_hilbert(pf, args):
    return {"hilbert_basis": _ivecs(pf.dp.hilbert_basis)}


def _cmd_gorenstein(pf, args, warnings):
    g = gorenstein_data(pf.dp)
    if g.non_unique:
        warnings.append("Gorenstein point is not unique")
    if g.omega is None:
        return {"omega": None, "index": None}
    return {"omega": _vec(g.omega), "index": g.index}


def _cmd_fpt(pf, args):
    return _threshold(T.fpt(pf.dp, pf.ideal(args.ideal)))


def _cmd_fthreshold(pf, args):
    a, J = pf.ideal(args.ideal), pf.ideal(args.with_)
    fn = T.f_threshold_candidates if args.method == "candidates" else T.f_threshold
    return _threshold(fn(pf.dp, a, J))


def _cmd_testideal(pf, args):
    if args.exponent is None:
        raise ProblemFileError("--exponent: required for testideal")
    c = _parse_exponent(args.exponent)
    tau = T.test_ideal_generators(pf.dp, pf.ideal(args.ideal), c)
    return {"exponent": _rat(c), "generators": _ivecs(tau.generators)}


def _parse_exponent(s):
    try:
        c = K.parse_rational(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ProblemFileError(f"--exponent: not a rational 'num/den' ({s!r})") from exc
    return c


def _cmd_jumping(pf, args):
    chain = T.jumping_coefficients(pf.dp, pf.ideal(args.ideal), args.count)
    return {
        "coefficients": [_rat(c) for c in chain.coefficients],
        "witnesses": [_vec(w.witness) for w in chain.witnesses],
        "ideals": [_ivecs(t.generators) for t in chain.ideals],
    }


def _oracle_config(pf):
    cfg = OracleConfig.from_env()
    if pf.budget is not None and "FTHRESH_BUDGET" not in os.environ:
        cfg = OracleConfig(budget=pf.budget, max_q=cfg.max_q)
    return cfg


def _prime_and_e(pf, args, e_default_key):
    p = args.p if args.p is not None else pf.p
    e = args.e if args.e is not None else getattr(pf, e_default_key)
    if p is None:
        raise ProblemFileError("p: prime required (flag --p or file field)")
    if e is None:
        raise ProblemFileError("e: exponent required (flag --e or file field)")
    return p, e


def _cmd_nu(pf, args):
    p, e = _prime_and_e(pf, args, "e_max")
    res = nu_search(NuQuery(pf.ideal(args.ideal), pf.ideal(args.with_), p, e), _oracle_config(pf))
    return {"p": p, "e": e, "q": p ** e, "nu": res.nu, "witness": list(res.witness),
            "multiplicities": list(res.multiplicities)}


def _cmd_report(pf, args, warnings):
    p, e_max = _prime_and_e(pf, args, "e_max")
    table = convergence_table(pf.ideal(args.ideal), pf.ideal(args.with_), p, e_max,
                              _oracle_config(pf))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["e", "q", "nu", "ratio", "limit"])
    rows = []
    for r in table.rows:
        nu_s = "" if r.nu is None else str(r.nu)
        ratio_s = "" if r.ratio is None else _rat(r.ratio)
        w.writerow([r.e, r.q, nu_s, ratio_s, _rat(table.limit)])
        rows.append({"e": r.e, "q": r.q, "nu": r.nu,
                     "ratio": None if r.ratio is None else _rat(r.ratio)})
    if table.partial:
        warnings.append("oracle budget exhausted; later rows absent")
    out = {"p": p, "limit": _rat(table.limit), "rows": rows}
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(buf.getvalue())
        out["csv_path"] = args.csv
    else:
        out["csv"] = buf.getvalue()
    return out, table.partial


def _cmd_regularity(pf, args):
    rep = T.regularity_probe(pf.dp, pf.ideal(args.ideal))
    return {"smooth": rep.smooth, "fpt": _rat(rep.fpt), "fthreshold": _rat(rep.fthreshold),
            "equal": rep.equal}


def run(command: str, problem: ProblemFile, args) -> tuple[dict, int]:
    """Dispatch one command; returns ``(result document, exit status)``."""
    warnings: list[str] = []
    partial = False
    if command == "dual":
        result = _cmd_dual(problem, args)
    elif command == "hilbert":
        result = _cmd_hilbert(problem, args)
    elif command == "gorenstein":
        result = _cmd_gorenstein(problem, args, warnings)
    elif command == "fpt":
        result = _cmd_fpt(problem, args)
    elif command == "fthreshold":
        result = _cmd_fthreshold(problem, args)
    elif command == "testideal":
        result = _cmd_testideal(problem, args)
    elif command == "jumping":
        result = _cmd_jumping(problem, args)
    elif command == "nu":
        result = _cmd_nu(problem, args)
    elif command == "report":
        result, partial = _cmd_report(problem, args, warnings)
    elif command == "regularity":
        result = _cmd_regularity(problem, args)
    else:
        raise ProblemFileError(f"command: unknown command {command!r}")
    doc = {"command": _echo(command, args), "result": result, "warnings": warnings}
    return doc, EXIT_PARTIAL if partial else EXIT_OK


def _echo(command, args):
    flags = {k: v for k, v in sorted(vars(args).items())
             if k not in ("command", "problem") and v is not None}
    if "with_" in flags:
        flags["with"] = flags.pop("with_")
    return {"name": command, "problem": args.problem, "flags": dict(sorted(flags.items()))}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fthresh", description="F-thresholds of monomial ideals on toric rings")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("problem", help="problem file (JSON)")
    ap.add_argument("--ideal", default="a")
    ap.add_argument("--with", dest="with_", default="m")
    ap.add_argument("--count", type=int, default=3)
    ap.add_argument("--exponent")
    ap.add_argument("--p", type=int)
    ap.add_argument("--e", type=int)
    ap.add_argument("--method", choices=("cells", "candidates"), default="cells")
    ap.add_argument("--csv")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        problem = load_problem(args.problem)
        doc, status = run(args.command, problem, args)
    except (OracleBudgetExceeded, EnumerationBoundExceeded) as exc:
        partial = getattr(exc, "partial", None)
        doc = {"command": _echo(args.command, args), "error": str(exc),
               "partial": _ivecs(partial) if partial else None}
        status = EXIT_PARTIAL
    except (FthreshError, ValueError, OSError) as exc:
        doc = {"command": _echo(args.command, args), "error": str(exc)}
        status = EXIT_INVALID
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
