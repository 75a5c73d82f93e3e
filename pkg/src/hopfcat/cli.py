"""``hopfcat`` command line: run checks on the objects of a model file."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from .constructors import StructuralPresentation
from .core import DegreeOverflow, HopfError, HopfPresentation, TruncationError, check_hopf_axioms
from .exactness import check_ses, check_split_diagram, factorize, hereditary_check, zero_morphism_search
from .functors import decompose
from .model import ModelError, ModelFile, parse_model

SCHEMA = "hopfcat.report/1"
EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _describe(H: HopfPresentation) -> Dict[str, Any]:
    out: Dict[str, Any] = {"name": H.name, "kind": getattr(H, "kind", "")}
    out["degree"] = H.degree
    out["dims_by_degree"] = H.dims_by_degree()
    if isinstance(H, StructuralPresentation):
        if H.lie.dim:
            out["lie_basis"] = list(H.lie.labels)
            out["brackets"] = {
                f"[{H.lie.labels[i]}, {H.lie.labels[j]}]": H.lie.format_vector(v)
                for (i, j), v in sorted(H.lie.structure_constants().items()) if i < j and v
            }
        if H.group.order > 1 or H.kind == "GroupAlgebra":
            out["group"] = list(H.group.labels)
    return out


def _map_images(f, generators_only: bool = True) -> Dict[str, str]:
    if generators_only and f.generator_images:
        return {lab: str(x) for lab, x in f.generator_images.items()}
    return {f.source.format_index(b): str(f.images[b]) for b in f.source.basis}


def _pick(table: Dict[str, Any], targets: List[str], what: str, default: Optional[List[str]] = None) -> List[str]:
    names = targets or (default if default is not None else list(table))
    for n in names:
        if n not in table:
            raise InputError(f"unknown {what} {n}")
    return names


# -- commands --------------------------------------------------------------

def cmd_check_axioms(model: ModelFile, targets: List[str]) -> List[Dict[str, Any]]:
    out = []
    for name in _pick(model.hopfs, targets, "hopf algebra"):
        v = check_hopf_axioms(model.hopfs[name])
        out.append({"target": name, "object": _describe(model.hopfs[name]), "verdicts": [v]})
    return out


def _decomposition_record(name: str, H: HopfPresentation) -> Dict[str, Any]:
    D = decompose(H)
    s = D.ses
    return {
        "target": name,
        "torsion": _describe(s.A),
        "free": _describe(s.B),
        "maps": {
            "i": _map_images(s.i),
            "p": _map_images(s.p, generators_only=False),
            "s": _map_images(s.s),
        },
        "comparison": {"name": D.comparison.name, **D.comparison_analysis.to_dict()},
        "grouplike_method": D.grouplikes.method,
        "verdicts": [check_ses(s)],
    }


def cmd_decompose(model: ModelFile, targets: List[str]) -> List[Dict[str, Any]]:
    return [_decomposition_record(n, model.hopfs[n]) for n in _pick(model.hopfs, targets, "hopf algebra")]


def cmd_torsion(model: ModelFile, targets: List[str]) -> List[Dict[str, Any]]:
    out = []
    for name in _pick(model.hopfs, targets, "hopf algebra"):
        rec = _decomposition_record(name, model.hopfs[name])
        s = decompose(model.hopfs[name]).ses
        rec["verdicts"].append(zero_morphism_search(s.A, s.B))
        rec["verdicts"].append(hereditary_check(s.p.compose_after(s.i, name=f"p∘i_{name}")))
        out.append(rec)
    return out


def cmd_factorize(model: ModelFile, targets: List[str]) -> List[Dict[str, Any]]:
    out = []
    for name in _pick(model.morphisms, targets, "morphism"):
        F = factorize(model.morphisms[name])
        rec: Dict[str, Any] = {"target": name}
        if F.p is not None:
            rec["image"] = _describe(F.p.target)
            rec["hker_basis"] = [str(x) for x in F.kernel.elements]
        rec["verdicts"] = [F.verdict]
        out.append(rec)
    return out


def cmd_verify_ses(model: ModelFile, targets: List[str]) -> List[Dict[str, Any]]:
    return [{"target": n, "verdicts": [check_ses(model.sequences[n])]}
            for n in _pick(model.sequences, targets, "split sequence")]


def cmd_verify_diagram(model: ModelFile, targets: List[str]) -> List[Dict[str, Any]]:
    out = []
    for name in _pick(model.diagrams, targets, "diagram"):
        spec = model.diagrams[name]
        out.append({"target": name, "verdicts": [check_split_diagram(spec.diagram, m) for m in spec.modes]})
    return out


def cmd_zero_hom(model: ModelFile, targets: List[str]) -> List[Dict[str, Any]]:
    if targets:
        if len(targets) % 2:
            raise InputError("zero-hom expects pairs of targets: T F [T F ...]")
        pairs = [(targets[k], targets[k + 1]) for k in range(0, len(targets), 2)]
        _pick(model.hopfs, targets, "hopf algebra")
    else:
        kinds = {n: getattr(H, "kind", "") for n, H in model.hopfs.items()}
        pairs = [(t, f) for t in kinds if kinds[t] == "Enveloping" for f in kinds if kinds[f] == "GroupAlgebra"]
    out = []
    for t, f in pairs:
        T, F = model.hopfs[t], model.hopfs[f]
        if not (isinstance(T, StructuralPresentation) and isinstance(F, StructuralPresentation)):
            raise InputError(f"zero-hom needs structural presentations, got {t} and {f}")
        out.append({"target": f"{t} {f}", "verdicts": [zero_morphism_search(T, F, reverse=True)]})
    return out


COMMANDS: Dict[str, Callable[[ModelFile, List[str]], List[Dict[str, Any]]]] = {
    "check-axioms": cmd_check_axioms,
    "decompose": cmd_decompose,
    "torsion": cmd_torsion,
    "factorize": cmd_factorize,
    "verify-ses": cmd_verify_ses,
    "verify-diagram": cmd_verify_diagram,
    "zero-hom": cmd_zero_hom,
}


# -- reports -----------------------------------------------------------------

def build_report(command: str, model: ModelFile, targets: List[str]) -> Dict[str, Any]:
    results = COMMANDS[command](model, targets)
    passed = all(v.passed for r in results for v in r["verdicts"])
    for r in results:
        r["passed"] = all(v.passed for v in r["verdicts"])
        r["verdicts"] = [v.to_dict() for v in r.pop("verdicts")]
    return {
        "schema": SCHEMA,
        "command": command,
        "model": model.path,
        "degree": model.degree,
        "passed": passed,
        "results": _jsonable(results),
    }


def render_text(report: Dict[str, Any]) -> str:
    lines = [f"{report['command']} {report['model']} (d={report['degree']})"]
    for r in report["results"]:
        lines.append(f"{'PASS' if r['passed'] else 'FAIL'} {r['target']}")
        for v in r["verdicts"]:
            for c in v["checks"]:
                mark = "ok  " if c["passed"] else "FAIL"
                tail = f"  witness: {c['witness']}" if not c["passed"] else ""
                lines.append(f"    {mark} {v['subject']}: {c['name']}{tail}")
    lines.append("PASS" if report["passed"] else "FAIL")
    return "\n".join(lines) + "\n"


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfcat", description="Exact checks on cocommutative Hopf algebras.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("model", help="model file")
    p.add_argument("targets", nargs="*", help="names of objects in the model (default: all applicable)")
    p.add_argument("--degree", type=int, help="override the truncation degree")
    p.add_argument("--out", help="write the report here instead of standard output")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds (breaks byte-stability)")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    start = time.perf_counter()
    try:
        if args.degree is not None and args.degree < 2:
            raise InputError(f"--degree must be at least 2, got {args.degree}")
        model = parse_model(args.model, degree=args.degree)
        report = build_report(args.command, model, args.targets)
    except (TruncationError, DegreeOverflow) as exc:
        print(f"hopfcat: {exc}; rerun with a larger --degree", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, ModelError, HopfError, OSError, UnicodeDecodeError) as exc:
        print(f"hopfcat: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 3)
    if args.format == "json":
        text = json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    else:
        text = render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if report["passed"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
