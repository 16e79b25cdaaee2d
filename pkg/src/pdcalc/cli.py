"""Command line front end.

Exit codes: 0 all checks pass, 1 some check fails, 2 input error,
3 an enumeration ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import config
from .errors import FormatError, PdcalcError, ResourceError
from .report import FAIL, INCONCLUSIVE, PASS, jsonable

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: [cli.main] {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("bounds must be positive")
    return v


def _common(p):
    p.add_argument("--bound", type=_positive, default=config.DEFAULT_BOUND)
    p.add_argument("--nmax", type=_positive, default=config.DEFAULT_NMAX)
    p.add_argument("--word-bound", type=_positive, default=config.DEFAULT_WORD_BOUND)
    p.add_argument("--budget", type=int, default=None,
                   help=f"cap on any single enumeration (default {config.DEFAULT_BUDGET}, "
                        "or PDCALC_BUDGET)")
    p.add_argument("--probes", default=None, help="probe family file")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--seed", default=None, help=argparse.SUPPRESS)


def build_parser():
    parser = _Parser(prog="pdcalc", description="Finite checks on prederivators and simplicial sets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        _common(p)
        return p

    p = cmd("validate", "validate a category, simplicial set, map or probe file")
    p.add_argument("file")
    p.add_argument("--kind", choices=("auto", "category", "sset", "map", "probes"), default="auto")
    p = cmd("nerve", "cell counts of the nerve of a category")
    p.add_argument("category")
    p = cmd("ho", "homotopy category of a simplicial set")
    p.add_argument("sset")
    p = cmd("eval", "evaluate a prederivator at a category")
    p.add_argument("pd")
    p.add_argument("category")
    p = cmd("rfunctor", "underlying simplicial set of a prederivator")
    p.add_argument("pd")
    p = cmd("qrep-check", "quasi-representability report")
    p.add_argument("pd")
    p = cmd("fibrancy", "lifting against inner horns through R")
    p.add_argument("pd")
    p = cmd("lift", "right lifting property of one simplicial map against another")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = cmd("afib", "lifting against boundary inclusions through R")
    p.add_argument("pdmap")
    p = cmd("weq", "levelwise equivalence for a certified equivalence")
    p.add_argument("map")
    p.add_argument("--certificate", required=True)
    p = cmd("lcheck", "evaluate L at a probe and check the unit")
    p.add_argument("sset")
    p.add_argument("--probe", required=True)
    cmd("example-1-13", "comparison L(Δ[1]×Δ[1]) -> L(Δ[1])×L(Δ[1]) at Γ")
    p = cmd("report-all", "run the acceptance suite")
    p.add_argument("--timings", action="store_true", help="include runtimes (not reproducible)")
    p.add_argument("--criteria", default=None, help="comma separated criterion ids")
    return parser


# -- helpers ---------------------------------------------------------------------------

def _exit_for(verdict):
    v = verdict.split(" ")[0]
    return {PASS: EXIT_OK, FAIL: EXIT_FAIL, INCONCLUSIVE: EXIT_RESOURCE}.get(v, EXIT_FAIL)


def _cat_summary(c):
    return {"name": c.name, "objects": c.n_obj, "morphisms": c.n_mor,
            "object_labels": list(c.obj_labels), "morphism_labels": list(c.mor_labels)}


def _sset_summary(x):
    return {"name": x.name, "bound": x.bound, "cells": [len(level) for level in x.cells],
            "nondegenerate": [len(x.nondegenerate(n)) for n in range(x.bound + 1)]}


def _probes(args):
    from .formats import load_probes
    from .pdv import ProbeFamily
    return load_probes(args.probes) if args.probes else ProbeFamily()


def _detect(doc):
    if "categories" in doc:
        return "probes"
    if "source" in doc and "target" in doc:
        return "map"
    if "bound" in doc:
        return "sset"
    if "objects" in doc:
        return "category"
    raise FormatError("cannot tell what kind of document this is", module="cli", op="validate")


# -- commands -------------------------------------------------------------------------

def cmd_validate(args):
    from .fincat import validate_category
    from .formats import category_from_doc, load_document, load_probes, map_from_doc, sset_from_doc
    from .sset import validate_map, validate_sset
    doc = load_document(args.file)
    kind = args.kind if args.kind != "auto" else _detect(doc)
    base = os.path.dirname(os.path.abspath(args.file))
    if kind == "category":
        bad = validate_category(category_from_doc(doc))
    elif kind == "sset":
        bad = validate_sset(sset_from_doc(doc))
    elif kind == "map":
        bad = validate_map(map_from_doc(doc, args.bound, base))
    else:
        load_probes(args.file)
        bad = None
    out = {"kind": kind, "verdict": PASS if bad is None else FAIL}
    if bad is not None:
        out["violation"] = jsonable(bad._asdict() if hasattr(bad, "_asdict") else bad)
    return out, out["verdict"]


def cmd_nerve(args):
    from .formats import load_category
    from .sset import nerve, validate_sset
    x = nerve(load_category(args.category), args.bound)
    out = _sset_summary(x)
    out["verdict"] = PASS if validate_sset(x) is None else FAIL
    return out, out["verdict"]


def cmd_ho(args):
    from .formats import load_sset
    from .hocat import ho
    x = load_sset(args.sset, args.bound)
    h = ho(x, args.word_bound)
    c = h.category
    comp = [[g, f, gf] for (g, f), gf in sorted(c.table_items())]
    out = {"mode": h.mode, "objects": c.n_obj, "morphisms": c.n_mor,
           "source": list(c.src), "target": list(c.tgt), "identities": list(c.identity),
           "compose": comp, "verdict": PASS}
    return out, PASS


def cmd_eval(args):
    from .formats import load_category, load_pd
    d = load_pd(args.pd, args.bound, args.word_bound)
    c = d.eval(load_category(args.category))
    out = _cat_summary(c)
    out["prederivator"] = d.name
    out["verdict"] = PASS
    return out, PASS


def cmd_rfunctor(args):
    from .formats import load_pd
    from .pdv import underlying_sset
    from .sset import validate_sset
    d = load_pd(args.pd, args.bound, args.word_bound)
    R = underlying_sset(d, args.bound)
    out = _sset_summary(R)
    out["prederivator"] = d.name
    out["verdict"] = PASS if validate_sset(R) is None else FAIL
    return out, out["verdict"]


def cmd_qrep(args):
    from .formats import load_pd
    from .quasirep import check_quasi_representable
    d = load_pd(args.pd, args.bound, args.word_bound)
    r = check_quasi_representable(d, _probes(args), args.bound, args.nmax)
    out = {"prederivator": d.name, **r.to_dict()}
    return out, r.verdict


def cmd_fibrancy(args):
    from .formats import load_pd
    from .modelcheck import is_fibrant_pd
    r = is_fibrant_pd(load_pd(args.pd, args.bound, args.word_bound), args.nmax, args.bound)
    return r.to_dict(), r.verdict


def cmd_lift(args):
    from .formats import load_map
    from .sset import has_rlp
    i, p = load_map(args.left, args.bound), load_map(args.right, args.bound)
    res = has_rlp(p, i)
    out = {"verdict": PASS if res else FAIL, "squares": res.squares}
    if not res:
        u, v = res.witness
        out["witness"] = {"top": jsonable(u.images), "bottom": jsonable(v.images)}
    return out, out["verdict"]


def cmd_afib(args):
    from .formats import load_pd_map
    from .modelcheck import is_acyclic_fibration_pd
    r = is_acyclic_fibration_pd(load_pd_map(args.pdmap, args.bound, args.word_bound), args.nmax, args.bound)
    return r.to_dict(), r.verdict


def cmd_weq(args):
    from .formats import load_certificate, load_document, map_from_doc
    from .modelcheck import weq_levelwise_equivalence
    doc = load_document(args.map)
    f = map_from_doc(doc, args.bound, os.path.dirname(os.path.abspath(args.map)))
    cert = load_certificate(args.certificate, f, doc, args.bound)
    r = weq_levelwise_equivalence(f, cert, _probes(args))
    return r.to_dict(), r.verdict


def cmd_lcheck(args):
    from .errors import WordBoundExceeded
    from .formats import load_category, load_sset
    from .lkan import L_eval_category, L_eval_objects, unit_check
    x = load_sset(args.sset, args.bound)
    j = load_category(args.probe)
    lo = L_eval_objects(x, j)
    out = {"sset": x.name, "probe": j.name, "objects": len(lo.elements)}
    verdict = PASS
    try:
        lc = L_eval_category(x, j, args.word_bound)
        out["category"] = {"objects": lc.category.n_obj, "morphisms": lc.category.n_mor}
        if lc.category.n_obj != len(lo.elements):
            verdict = FAIL
            out["mismatch"] = "object counts of the set and category colimits differ"
    except WordBoundExceeded as e:
        out["category"] = {"bound_exceeded": str(e)}
    unit = unit_check(x)
    out["unit"] = unit.to_dict()
    if not unit.passed:
        verdict = FAIL
    out["verdict"] = verdict
    return out, verdict


def cmd_example(args):
    from .lkan import example_1_13
    r = example_1_13()
    out = r.to_dict()
    out["verdict"] = PASS if r.passed else FAIL
    return out, out["verdict"]


def report_all(probes=None, timings=False, only=None):
    """Run the acceptance suite.

    Criterion 12 runs criteria 1 to 11 a second time in the same process and
    compares the serialised records; the test suite also compares two
    separate command line runs.
    """
    from .acceptance import ANCHORS, CRITERIA, run_all

    def strip(d):
        return json.dumps({k: {a: b for a, b in r.items() if a not in ("runtime_ms", "limit_ms")}
                           for k, r in d.items()}, sort_keys=True, ensure_ascii=False)

    wanted = sorted(only) if only else sorted(CRITERIA) + [12]
    base = [i for i in wanted if i != 12]
    doc = run_all(timings, base, probes) if base else {}
    if 12 in wanted:
        ref = doc if set(base) == set(CRITERIA) else run_all(False, None, probes)
        same = strip(ref) == strip(run_all(False, None, probes))
        doc["12"] = {"criterion": 12, "anchor": ANCHORS[12],
                     "checks": [{"check": "two in-process runs serialise identically",
                                 "verdict": PASS if same else FAIL}],
                     "verdict": PASS if same else FAIL}
    return doc


def cmd_report_all(args):
    only = None
    if args.criteria:
        try:
            only = sorted({int(t) for t in args.criteria.split(",") if t})
        except ValueError:
            raise FormatError("--criteria takes comma separated integers", module="cli", op="report_all") from None
        if not set(only) <= set(range(1, 13)):
            raise FormatError("criteria are numbered 1 to 12", module="cli", op="report_all")
    doc = report_all(_probes(args), args.timings, only)
    verdicts = [r["verdict"] for r in doc.values()]
    if INCONCLUSIVE in verdicts:
        overall = INCONCLUSIVE
    elif FAIL in verdicts:
        overall = FAIL
    else:
        overall = PASS
    return {"criteria": doc, "verdict": overall}, overall


COMMANDS = {
    "validate": cmd_validate, "nerve": cmd_nerve, "ho": cmd_ho, "eval": cmd_eval,
    "rfunctor": cmd_rfunctor, "qrep-check": cmd_qrep, "fibrancy": cmd_fibrancy, "lift": cmd_lift,
    "afib": cmd_afib, "weq": cmd_weq, "lcheck": cmd_lcheck, "example-1-13": cmd_example,
    "report-all": cmd_report_all,
}


def _text(out, indent=0):
    pad = "  " * indent
    lines = []
    for k, v in out.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_text(v, indent + 1))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{k}:")
            for x in v:
                lines.append(f"{pad}  - " + ", ".join(f"{a}={json.dumps(b, ensure_ascii=False)}"
                                                    for a, b in x.items()))
        else:
            lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False) if not isinstance(v, str) else v}")
    return lines


def _emit(out, fmt):
    out = jsonable(out)
    if fmt == "json":
        print(json.dumps(out, indent=2, ensure_ascii=False))
    else:
        print("\n".join(_text(out)))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is not None:
        print("error: [cli.main] --seed is not supported: nothing here is random", file=sys.stderr)
        return EXIT_INPUT
    try:
        limit = args.budget if args.budget is not None else config.get_budget()
    except ValueError:
        print("error: [cli.main] PDCALC_BUDGET must be an integer", file=sys.stderr)
        return EXIT_INPUT
    if limit < config.MIN_BUDGET:
        print(f"error: [cli.main] budget must be at least {config.MIN_BUDGET}", file=sys.stderr)
        return EXIT_INPUT
    try:
        with config.budget(limit):
            out, verdict = COMMANDS[args.command](args)
    except ResourceError as e:
        _emit({"verdict": INCONCLUSIVE, "error": str(e), "count": e.count}, args.format)
        return EXIT_RESOURCE
    except PdcalcError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    _emit(out, args.format)
    return _exit_for(verdict)


if __name__ == "__main__":
    sys.exit(main())
