"""Command-line front end for the swcalc engine.

Usage examples (from project root):

    PYTHONPATH=src python -m swcalc.cli eval expressions/z_m3_g1.json
    PYTHONPATH=src python -m swcalc.cli chars zprime_m2.json --format json
    PYTHONPATH=src python -m swcalc.cli geography --m-range 3..6 --g-range 1..8 --format csv
    PYTHONPATH=src python -m swcalc.cli basic-classes --scenario Y2g --param g=3
    PYTHONPATH=src python -m swcalc.cli demo surgery

Expression files are looked up as given and then under ``SWCALC_EXAMPLES``
(default ``expressions/``). Errors print one line on stderr and exit with 1.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import structlog
from pydantic import ValidationError

from .basic_classes import (
    AdjunctionScenario,
    Candidates,
    enumerate_candidates,
    scenario_by_name,
    scenario_from_manifold,
)
from .config import Config
from .constructions import eval_expr, expr_schema, load_expr
from .demo import SECTIONS, run_demo
from .errors import ExpressionError, InvalidParameterError, SWCalcError
from .geography import geography_scan
from .lefschetz import enk_fibration, mng_fibration, singular_fiber_model, twisted_fiber_sum_check, vanishing_cycle_audit
from .logs import configure_logging
from .manifold import (
    FourManifold,
    characteristic_numbers,
    homeo_compare,
    max_part,
    render_sw,
    render_text,
    taubes_symplectic_check,
)

logger = structlog.get_logger(__name__)


# -- helpers ---------------------------------------------------------------------------


def _dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=str)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def resolve_path(name: str, config: Optional[Config] = None) -> Path:
    path = Path(name)
    if path.exists():
        return path
    config = config or Config()
    candidate = config.examples_dir / name
    if candidate.exists():
        return candidate
    raise ExpressionError(f"no expression file {name!r} here or under {config.examples_dir}")


def _load_manifold(name: str) -> FourManifold:
    return eval_expr(load_expr(resolve_path(name)))


def parse_range(text: str) -> range:
    """``"3..6"`` is the inclusive range 3, 4, 5, 6; a bare ``"4"`` is just 4."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        value = int(text)
    except ValueError:
        raise InvalidParameterError(f"bad range {text!r}; expected a..b") from None
    return range(value, value + 1)


def _parse_params(items: Sequence[str]) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidParameterError(f"bad parameter {item!r}; expected key=value")
        try:
            parsed: Any = [int(v) for v in value.split(",")] if "," in value or key == "L" else int(value)
        except ValueError:
            raise InvalidParameterError(f"parameter {key!r} must be an integer or list, got {value!r}") from None
        params[key] = parsed
    return params


def _csv(rows: List[Dict[str, Any]]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _kv_text(data: Dict[str, Any]) -> str:
    width = max(len(k) for k in data)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in data.items())


# -- commands ------------------------------------------------------------------------------


def _cmd_eval(args: argparse.Namespace) -> int:
    """Evaluate an expression file and print the full invariant record."""
    m = _load_manifold(args.file)
    _emit(m.to_json() if args.format == "json" else render_text(m), args.out)
    return 0


def _cmd_sw(args: argparse.Namespace) -> int:
    """Print the SW value and, per tracked surface, its maximal part where determined."""
    m = _load_manifold(args.file)
    parts: Dict[str, Optional[str]] = {}
    for s in m.surfaces:
        try:
            parts[s.label] = max_part(m, s.label).pretty()
        except SWCalcError as exc:
            logger.debug("max_part_undetermined", surface=s.label, reason=str(exc))
            parts[s.label] = None
    if args.format == "json":
        text = _dumps({"name": m.name, "kind": m.sw.kind, "sw": render_sw(m.sw, pretty=False), "max_parts": parts})
    else:
        lines = [f"SW({m.name}) = {render_sw(m.sw)}"]
        lines += [f"  max along {label}: {value if value is not None else 'undetermined'}" for label, value in parts.items()]
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def _cmd_chars(args: argparse.Namespace) -> int:
    m = _load_manifold(args.file)
    data = characteristic_numbers(m)
    if args.format == "json":
        text = _dumps(data)
    elif args.format == "csv":
        text = _csv([data])
    else:
        text = _kv_text(data)
    _emit(text, args.out)
    return 0


def _cmd_homeo(args: argparse.Namespace) -> int:
    a = _load_manifold(args.file_a)
    b = _load_manifold(args.file_b)
    verdict = homeo_compare(a, b)
    if args.format == "json":
        text = _dumps({"left_name": a.name, "right_name": b.name, **verdict.model_dump()})
    else:
        lines = [
            f"{a.name}: (e, sign, parity) = {verdict.left}",
            f"{b.name}: (e, sign, parity) = {verdict.right}",
            f"verdict: {verdict.verdict}",
        ]
        lines += [f"  {note}" for note in verdict.notes]
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def _cmd_taubes(args: argparse.Namespace) -> int:
    m = _load_manifold(args.file)
    verdict = taubes_symplectic_check(m)
    if args.format == "json":
        text = _dumps({"name": m.name, **verdict.model_dump()})
    else:
        text = f"{m.name}: {verdict.verdict} ({verdict.reason})"
    _emit(text, args.out)
    return 0


def _cmd_geography(args: argparse.Namespace) -> int:
    rows = [r.model_dump() for r in geography_scan(parse_range(args.m_range), parse_range(args.g_range))]
    if args.format == "json":
        text = _dumps({"count": len(rows), "rows": rows})
    elif args.format == "csv":
        text = _csv(rows)
    else:
        lines = [f"{'m':>3} {'g':>3} {'chi':>5} {'c1^2':>5}  {'verdict':<13} restricted closed_form agree"]
        for r in rows:
            lines.append(
                f"{r['m']:>3} {r['g']:>3} {r['chi']:>5} {r['c1sq']:>5}  {r['verdict']:<13} "
                f"{str(r['restricted']):<10} {str(r['closed_form']):<11} {r['agree']}"
            )
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def _load_scenario(name: str, params: Dict[str, Any]) -> AdjunctionScenario:
    path = Path(name)
    if not path.exists():
        candidate = Config().examples_dir / name
        path = candidate if candidate.exists() else path
    if not path.exists():
        return scenario_by_name(name, params)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ExpressionError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if isinstance(data, dict) and "op" in data:
        return scenario_from_manifold(eval_expr(load_expr(path)))
    try:
        return AdjunctionScenario.model_validate(data)
    except ValidationError as exc:
        raise ExpressionError(f"{path}: not a scenario: {exc.errors()[0]['msg']}", cause=exc) from exc


def _cmd_basic_classes(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.scenario, _parse_params(args.param or []))
    result = enumerate_candidates(scenario, limit=Config().enumeration_limit)
    if isinstance(result, Candidates):
        described = result.describe(scenario.lattice)
        data: Dict[str, Any] = {"scenario": scenario.name, "status": "candidates", "count": len(described), "candidates": described}
    else:
        data = {"scenario": scenario.name, "status": "vanishes", "reason": result.reason}
    if args.format == "json":
        text = _dumps(data)
    elif data["status"] == "vanishes":
        text = f"{scenario.name}: SW vanishes ({data['reason']})"
    else:
        text = "\n".join([f"{scenario.name}: {data['count']} candidate basic classes"] + [f"  {c}" for c in data["candidates"]])
    _emit(text, args.out)
    return 0


def _cmd_lefschetz(args: argparse.Namespace) -> int:
    n, g = args.n, args.g
    data: Dict[str, Any] = {
        "enk_fibration": enk_fibration(n, g).model_dump(),
        "mng_fibration": mng_fibration(n, g).model_dump(),
        "singular_fiber_model": singular_fiber_model(n, g).model_dump(),
        "twisted_fiber_sum": twisted_fiber_sum_check(n, g).model_dump(),
    }
    if args.audit:
        data["vanishing_cycle_audit"] = vanishing_cycle_audit(n, g).model_dump()
    if args.format == "json":
        text = _dumps(data)
    else:
        blocks = []
        for title, block in data.items():
            blocks.append(f"{title}\n" + "\n".join(f"  {k}: {v}" for k, v in block.items()))
        text = "\n".join(blocks)
    _emit(text, args.out)
    return 0


def _cmd_demo(args: argparse.Namespace) -> int:
    sections = sorted(SECTIONS) if args.section == "all" else [args.section]
    reports = [run_demo(s) for s in sections]
    if args.format == "json":
        text = _dumps(
            {"passed": all(r.passed for r in reports), "sections": [{**r.model_dump(), "passed": r.passed} for r in reports]}
        )
    else:
        text = "\n\n".join(r.render_text() for r in reports)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_schema(args: argparse.Namespace) -> int:
    _emit(_dumps(expr_schema()), args.out)
    return 0


# -- parser -------------------------------------------------------------------------------


def _add_output(p: argparse.ArgumentParser, formats: Tuple[str, ...] = ("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default="text", help="Output format")
    p.add_argument("--out", type=str, default=None, help="Write the output to this file instead of stdout")
    p.add_argument(
        "--seed", choices=("none",), default="none", help="No randomness is used; only 'none' is accepted"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Symbolic Seiberg-Witten calculus on knot-surgered and fiber-summed 4-manifolds",
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    # eval command
    p_eval = subparsers.add_parser("eval", help="Evaluate a manifold-expression file")
    p_eval.add_argument("file", help="Expression JSON file (path or name under SWCALC_EXAMPLES)")
    _add_output(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    # sw command
    p_sw = subparsers.add_parser("sw", help="Print the SW value and its maximal parts")
    p_sw.add_argument("file")
    _add_output(p_sw)
    p_sw.set_defaults(func=_cmd_sw)

    # chars command
    p_chars = subparsers.add_parser("chars", help="Print chi, c1^2, e, sign and b2+/-")
    p_chars.add_argument("file")
    _add_output(p_chars, ("text", "json", "csv"))
    p_chars.set_defaults(func=_cmd_chars)

    # homeo command
    p_homeo = subparsers.add_parser("homeo", help="Compare the homeomorphism types of two expressions")
    p_homeo.add_argument("file_a")
    p_homeo.add_argument("file_b")
    _add_output(p_homeo)
    p_homeo.set_defaults(func=_cmd_homeo)

    # taubes command
    p_taubes = subparsers.add_parser("taubes", help="Check the SW value against a symplectic structure")
    p_taubes.add_argument("file")
    _add_output(p_taubes)
    p_taubes.set_defaults(func=_cmd_taubes)

    # geography command
    p_geo = subparsers.add_parser("geography", help="Scan Z(m, g) against the spin geography restriction")
    p_geo.add_argument("--m-range", type=str, default="1..6", dest="m_range", help="Inclusive range a..b of m")
    p_geo.add_argument("--g-range", type=str, default="1..8", dest="g_range", help="Inclusive range c..d of g")
    _add_output(p_geo, ("text", "json", "csv"))
    p_geo.set_defaults(func=_cmd_geography)

    # basic-classes command
    p_bc = subparsers.add_parser("basic-classes", help="Enumerate candidate basic classes of a scenario")
    p_bc.add_argument(
        "--scenario",
        required=True,
        help="Built-in scenario (Y2g, Y, Yprime_neg1), a scenario JSON file or an expression file",
    )
    p_bc.add_argument("--param", action="append", help="Scenario parameter key=value, e.g. g=3 or L=1,2")
    _add_output(p_bc)
    p_bc.set_defaults(func=_cmd_basic_classes)

    # lefschetz command
    p_lf = subparsers.add_parser("lefschetz", help="Fibration counts for E(n)_K and M(n, g)")
    p_lf.add_argument("--n", type=int, required=True)
    p_lf.add_argument("--g", type=int, required=True)
    p_lf.add_argument("--audit", action="store_true", help="Include the vanishing cycle audit (n >= 2)")
    _add_output(p_lf)
    p_lf.set_defaults(func=_cmd_lefschetz)

    # demo command
    p_demo = subparsers.add_parser("demo", help="Run a bundle of golden checks")
    p_demo.add_argument("section", choices=sorted(SECTIONS) + ["all"])
    _add_output(p_demo)
    p_demo.set_defaults(func=_cmd_demo)

    # schema command
    p_schema = subparsers.add_parser("schema", help="Print the manifold-expression JSON schema")
    p_schema.add_argument("--out", type=str, default=None)
    p_schema.set_defaults(func=_cmd_schema)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if not hasattr(args, "func"):
        parser.print_help()
        return 2

    configure_logging()
    try:
        return int(args.func(args))
    except SWCalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
