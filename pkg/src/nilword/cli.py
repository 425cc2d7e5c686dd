"""Command-line interface and the JSON interchange format for algebras.

Document schema: {"p": int, "dim": int, "name": str?, "brackets": [{"i": int,
"j": int, "v": {basis index: coefficient}}]} with i < j; unlisted pairs are
zero brackets and the antisymmetric counterparts are filled in on load.

Exit codes: 0 success/agreement, 1 validation failure, 2 disagreement,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import catalog
from .budgets import (DEFAULT_IMAGE_POINTS, DEFAULT_ORACLE_PAIRS,
                      BudgetExceededError)
from .classify import breadth_profile, classify_breadth, theorem_verdict
from .gfp import PrimeField
from .image import image_report, word_image, word_image_bruteforce
from .liecore import LieAlgebra, structure_report

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREE = 2
EXIT_BUDGET = 3

IMAGE_BUDGET_ENV = "NILWORD_IMAGE_BUDGET"
ORACLE_BUDGET_ENV = "NILWORD_ORACLE_BUDGET"


class DocumentError(ValueError):
    """A malformed algebra document; the message names the offending field."""


def _budget(env_name: str, default: int) -> int:
    raw = os.environ.get(env_name)
    if raw is None:
        return default
    if not raw.isdigit():
        raise DocumentError(
            f"environment variable {env_name} must be a decimal integer, got {raw!r}")
    return int(raw)


def _require_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def load_document(doc) -> LieAlgebra:
    """Build a LieAlgebra from a parsed document, checking every field."""
    if not isinstance(doc, dict):
        raise DocumentError("document root must be a JSON object")
    if "p" not in doc:
        raise DocumentError("field 'p' is required")
    p = _require_int(doc["p"], "field 'p'")
    try:
        field = PrimeField(p)
    except ValueError as exc:
        raise DocumentError(f"field 'p': {exc}") from None
    if "dim" not in doc:
        raise DocumentError("field 'dim' is required")
    dim = _require_int(doc["dim"], "field 'dim'")
    if dim < 1:
        raise DocumentError(f"field 'dim' must be a positive integer, got {dim}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError(f"field 'name' must be a string, got {name!r}")
    brackets_raw = doc.get("brackets", [])
    if not isinstance(brackets_raw, list):
        raise DocumentError("field 'brackets' must be a list")
    table: dict[tuple[int, int], dict[int, int]] = {}
    for idx, entry in enumerate(brackets_raw):
        where = f"brackets[{idx}]"
        if not isinstance(entry, dict):
            raise DocumentError(f"{where} must be an object with fields i, j, v")
        for key in ("i", "j", "v"):
            if key not in entry:
                raise DocumentError(f"{where}.{key} is required")
        i = _require_int(entry["i"], f"{where}.i")
        j = _require_int(entry["j"], f"{where}.j")
        for label, val in (("i", i), ("j", j)):
            if not 0 <= val < dim:
                raise DocumentError(
                    f"{where}.{label}: index {val} out of range for dim {dim}")
        if i == j:
            raise DocumentError(
                f"{where}: i = j = {i} contradicts antisymmetry ([e_i, e_i] = 0)")
        if i > j:
            raise DocumentError(
                f"{where}: i < j is required (the antisymmetric counterpart "
                f"is added on load), got i={i}, j={j}")
        if (i, j) in table:
            raise DocumentError(f"{where}: duplicate pair (i={i}, j={j})")
        v = entry["v"]
        if not isinstance(v, dict):
            raise DocumentError(f"{where}.v must be an object mapping "
                                "basis index to coefficient")
        row: dict[int, int] = {}
        for k_raw, coeff in v.items():
            try:
                k = int(k_raw)
            except (TypeError, ValueError):
                raise DocumentError(
                    f"{where}.v: key {k_raw!r} is not a basis index") from None
            if not 0 <= k < dim:
                raise DocumentError(
                    f"{where}.v: index {k} out of range for dim {dim}")
            row[k] = _require_int(coeff, f"{where}.v[{k}]") % p
        table[(i, j)] = row
    return LieAlgebra.from_brackets(field, dim, table, name=name)


def load_document_file(path: str) -> LieAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON in {path}: {exc}") from None
    return load_document(doc)


def dump_document(L: LieAlgebra) -> dict:
    """Canonical document for L: pairs with i < j, ascending, sparse."""
    brackets = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            row = {str(k): int(c) for k, c in enumerate(L.sc[i, j]) if c}
            if row:
                brackets.append({"i": i, "j": j, "v": row})
    return {"p": L.p, "dim": L.dim, "name": L.name, "brackets": brackets}


def _jsonable(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def build_report(L: LieAlgebra, sections: set[str], image_budget: int) -> dict:
    """ReportDocument as a dict; always includes the structure section."""
    report: dict = {"algebra": {"name": L.name, "p": L.p, "dim": L.dim}}
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    rep = structure_report(L)
    timings["structure"] = (time.perf_counter() - t0) * 1000.0
    report["structure"] = {
        "is_nilpotent": rep.is_nilpotent,
        "nilpotency_class": rep.nilpotency_class,
        "lcs_dims": list(rep.lcs_dims),
        "derived_dim": rep.derived_dim,
        "center_dim": rep.center_dim,
        "is_stem": rep.is_stem,
        "min_generators": rep.min_generators,
    }
    if "breadth" in sections:
        t0 = time.perf_counter()
        prof = breadth_profile(L, budget=image_budget)
        timings["breadth"] = (time.perf_counter() - t0) * 1000.0
        report["breadth"] = {
            "b_max": prof.b_max,
            "type": list(prof.type_set),
            "counts": {str(b): c for b, c in sorted(prof.counts.items())},
        }
    if "image" in sections:
        t0 = time.perf_counter()
        img = image_report(L, budget=image_budget)
        timings["image"] = (time.perf_counter() - t0) * 1000.0
        report["image"] = {
            "image_size": img.image_size,
            "derived_size": img.derived_size,
            "equals_derived": img.equals_derived,
            "sum_depth": img.sum_depth,
            "witness_missing": (list(img.witness_missing)
                                if img.witness_missing is not None else None),
        }
    if "verdict" in sections:
        t0 = time.perf_counter()
        verdict = theorem_verdict(L, budget=image_budget)
        timings["verdict"] = (time.perf_counter() - t0) * 1000.0
        report["verdict"] = {
            "applicable_rule": verdict.applicable_rule,
            "predicted_w_neq": verdict.predicted_w_neq,
            "computed_w_neq": verdict.computed_w_neq,
            "agree": verdict.agree,
            "branch_evidence": _jsonable(verdict.branch_evidence),
            "consistency_notes": list(verdict.consistency_notes),
        }
    report["timings_ms"] = {k: round(v, 3) for k, v in timings.items()}
    return report


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    if isinstance(value, dict):
        return " ".join(f"{k}:{_fmt(v)}" for k, v in value.items())
    return str(value)


def render_report(report: dict) -> str:
    alg = report["algebra"]
    lines = [f"algebra: {alg['name']}  (p={alg['p']}, dim={alg['dim']})"]
    for section in ("structure", "breadth", "image", "verdict"):
        if section not in report:
            continue
        lines.append(f"{section}:")
        for key, value in report[section].items():
            lines.append(f"  {key}: {_fmt(value)}")
    timings = report.get("timings_ms", {})
    if timings:
        lines.append("timings_ms: "
                     + " ".join(f"{k}={v}" for k, v in timings.items()))
    return "\n".join(lines)


def cmd_validate(args) -> int:
    try:
        L = load_document_file(args.file)
    except DocumentError as exc:
        print(f"invalid document: {exc}", file=sys.stderr)
        return EXIT_INVALID
    problems = L.validate()
    if problems:
        for msg in problems:
            print(msg)
        return EXIT_INVALID
    print(f"valid: {L.name} (p={L.p}, dim={L.dim})")
    return EXIT_OK


def cmd_analyze(args) -> int:
    L = load_document_file(args.file)
    chosen = {name for name, on in (("image", args.image),
                                    ("breadth", args.breadth),
                                    ("verdict", args.verdict)) if on}
    sections = chosen or {"image", "breadth", "verdict"}
    problems = L.validate()
    if problems:
        for msg in problems:
            print(msg, file=sys.stderr)
        return EXIT_INVALID
    report = build_report(L, sections, args.image_budget)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print(render_report(report))
    verdict = report.get("verdict")
    if verdict is not None and not verdict["agree"]:
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for key in catalog.catalog_keys():
            print(key)
        return EXIT_OK
    field = PrimeField(args.p)
    params = {k: v for k, v in (("m", args.m), ("d", args.d), ("g", args.g),
                                ("eps", args.eps), ("r", args.r))
              if v is not None}
    try:
        entry = catalog.build(args.key, field, **params)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_INVALID
    except (TypeError, ValueError) as exc:
        print(f"invalid parameters for {args.key}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.action == "export":
        print(json.dumps(dump_document(entry.algebra), indent=2))
        return EXIT_OK
    L = entry.algebra
    print(f"{entry.key}  name={L.name}  p={L.p}  dim={L.dim}")
    for fieldname, exp in entry.expected.items():
        print(f"  expected {fieldname}: {_fmt(exp.value)}  [{exp.source}]")
    return EXIT_OK


def _verify_entry(entry: catalog.CatalogEntry, image_budget: int) -> tuple[bool, list[str]]:
    """Check every expected field and the verdict agreement; list mismatches."""
    from .image import commuting_generating_quad, sum_depth

    L = entry.algebra
    problems: list[str] = []
    rep = structure_report(L)
    computed: dict[str, object] = {
        "dim": rep.dim,
        "class": rep.nilpotency_class,
        "derived_dim": rep.derived_dim,
        "center_dim": rep.center_dim,
    }
    if "breadth_type" in entry.expected:
        computed["breadth_type"] = breadth_profile(L, budget=image_budget).type_set
    img = None
    if "w_equals_derived" in entry.expected or "sum_depth" in entry.expected:
        img = word_image(L, budget=image_budget)
        computed["w_equals_derived"] = img.is_full
    if "sum_depth" in entry.expected:
        computed["sum_depth"] = sum_depth(L, image=img, budget=image_budget).k
    if "commuting_quad" in entry.expected:
        quad = commuting_generating_quad(L)
        computed["commuting_quad"] = "none" if quad is None else "found"
    for name, exp in entry.expected.items():
        got = computed.get(name, "<not computed>")
        if got != exp.value:
            problems.append(f"{name}: expected {_fmt(exp.value)} [{exp.source}], "
                            f"got {_fmt(got)}")
    verdict = theorem_verdict(L, budget=image_budget)
    if not verdict.agree:
        problems.append(f"verdict disagreement: predicted w!=L' = "
                        f"{verdict.predicted_w_neq}, computed = {verdict.computed_w_neq}")
    return not problems, problems


def cmd_verify(args) -> int:
    try:
        primes = [int(tok) for tok in args.p.split(",") if tok]
    except ValueError:
        print(f"--p must be a comma-separated list of primes, got {args.p!r}",
              file=sys.stderr)
        return EXIT_INVALID
    worst = EXIT_OK
    for p in primes:
        try:
            field = PrimeField(p)
        except ValueError as exc:
            print(f"--p: {exc}", file=sys.stderr)
            return EXIT_INVALID
        if args.all or args.key is None:
            entries = catalog.default_entries(field)
        else:
            try:
                entries = [catalog.build(args.key, field)]
            except KeyError as exc:
                print(exc.args[0], file=sys.stderr)
                return EXIT_INVALID
        for entry in entries:
            ok, problems = _verify_entry(entry, args.image_budget)
            label = entry.algebra.name
            status = "AGREE" if ok else "MISMATCH"
            print(f"p={p}  {label:<18} {status}")
            for msg in problems:
                print(f"    {msg}")
            if not ok:
                worst = EXIT_DISAGREE
    return worst


def cmd_random(args) -> int:
    field = PrimeField(args.p)
    try:
        L = catalog.random_2step(args.generators, args.derived, args.seed, field)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    if not args.analyze:
        print(json.dumps(dump_document(L), indent=2))
        return EXIT_OK
    report = build_report(L, {"image", "breadth", "verdict"}, args.image_budget)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_report(report))
    return EXIT_OK if report["verdict"]["agree"] else EXIT_DISAGREE


def cmd_oracle(args) -> int:
    L = load_document_file(args.file)
    problems = L.validate()
    if problems:
        for msg in problems:
            print(msg, file=sys.stderr)
        return EXIT_INVALID
    fast = word_image(L, budget=args.image_budget)
    slow = word_image_bruteforce(L, budget=args.oracle_budget)
    agree = fast == slow
    print(f"word_image:            {fast.count} of {fast.members.size} points")
    print(f"word_image_bruteforce: {slow.count} of {slow.members.size} points")
    print("AGREE" if agree else "DISAGREE")
    return EXIT_OK if agree else EXIT_DISAGREE


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilword",
        description="Exact bracket word-map images of nilpotent Lie algebras over F_p")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="check a JSON algebra document")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("analyze", help="structure/breadth/image/verdict report")
    sp.add_argument("file")
    sp.add_argument("--image", action="store_true", help="include the image section")
    sp.add_argument("--breadth", action="store_true", help="include the breadth section")
    sp.add_argument("--verdict", action="store_true", help="include the verdict section")
    sp.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("catalog", help="list, show or export built-in algebras")
    sp.add_argument("action", choices=["list", "show", "export"])
    sp.add_argument("key", nargs="?")
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--m", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--g", type=int)
    sp.add_argument("--eps", type=int)
    sp.add_argument("--r", type=int)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("verify", help="check catalog expectations and verdicts")
    sp.add_argument("key", nargs="?", help="catalog key; omit (or --all) for all")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--p", default="3,5", help="comma-separated primes")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("random", help="seeded random 2-step algebra")
    sp.add_argument("--generators", type=int, default=4)
    sp.add_argument("--derived", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--analyze", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("oracle", help="compare word_image against the pair sweep")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        args.image_budget = _budget(IMAGE_BUDGET_ENV, DEFAULT_IMAGE_POINTS)
        args.oracle_budget = _budget(ORACLE_BUDGET_ENV, DEFAULT_ORACLE_PAIRS)
    except DocumentError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    try:
        if args.command == "catalog" and args.action != "list" and args.key is None:
            print("catalog show/export requires a key", file=sys.stderr)
            return EXIT_INVALID
        return args.func(args)
    except DocumentError as exc:
        print(f"invalid document: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
