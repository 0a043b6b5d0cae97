"""Batch command line: run one job document, print a report.

Exit codes: 0 when the computation succeeds, 1 when the mathematics
refutes the request (a sequence is not regular, a square fails, a
projection is not unital), 2 for malformed or semantically invalid
input.  Timing appears only in the text output so the JSON report stays
byte-identical across runs.
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .clifford import antipode, homology_presentation, induced_algebra_map
from .conormal import (
    base_change_form,
    characteristic_form_diagonal,
    conormal_module,
    zero_form,
)
from .derivations import (
    bockstein,
    cohomology_presentation,
    compose,
    duality_square_commutes,
    leibniz_check,
    theta_rank,
)
from .clifford import CliffordAlgebra
from .errors import (
    AlgebraError,
    ConditionIIFails,
    NotCompatible,
    NotInIdeal,
    NotRegular,
    NotUnital,
    NotVerifiedRegular,
    NotWellDefined,
    SemanticError,
)
from .exprs import evaluate
from .ideals import check_condition_ii, decompose_conormal, tor
from .jobio import (
    JobDescription,
    canonical_json,
    element_payload,
    form_payload,
    graded_report_payload,
    module_entry_payload,
    parse_job,
    presentation_payload,
    ring_from_job,
    sequence_from_job,
    spec_from_job,
    target_from_job,
)
from .morava import build_scenario, kn_algebra, kn_form
from .pairs import PairMorphism, make_pair, naturality_suite

MATH_ERRORS = (
    NotRegular,
    NotVerifiedRegular,
    ConditionIIFails,
    NotCompatible,
    NotWellDefined,
    NotUnital,
    NotInIdeal,
)


@dataclass
class JobReport:
    command: str
    status: int
    results: dict
    warnings: tuple = ()

    def payload(self) -> dict:
        return {
            "command": self.command,
            "status": self.status,
            "results": self.results,
            "warnings": list(self.warnings),
        }


def _scenario_from(doc: dict, window, laurent):
    block = doc["scenario"]
    return build_scenario(
        block["p"],
        block["n"],
        window=window if window is not None else doc.get("window", {}).get("degree"),
        laurent=(
            laurent
            if laurent is not None
            else doc.get("window", {}).get("laurent", 2)
        ),
    )


def _spec_and_target(doc: dict, window, laurent):
    if "scenario" in doc:
        sc = _scenario_from(doc, window, laurent)
        return sc.spec, None
    ring = ring_from_job(doc, window, laurent)
    return spec_from_job(ring, doc), target_from_job(ring, doc)


def algebra_element(cl, text: str):
    """Parse an algebra element: generator names, coefficients, products."""
    index = {name: i for i, name in enumerate(cl.names)}

    def atom(name):
        if name in index:
            return cl.generator(index[name])
        if hasattr(cl.coeff, "ring"):
            return cl.scalar(cl.coeff.ring.var(name))
        raise SemanticError("unknown name %r in algebra expression" % (name,))

    def constant(value):
        return cl.scalar(value)

    def power(value, k):
        if k < 0:
            raise SemanticError("negative powers are not defined in the algebra")
        return value**k

    return evaluate(text, atom, constant, power)


def _cmd_presentation(doc, window, laurent):
    spec, target = _spec_and_target(doc, window, laurent)
    pres, _ = homology_presentation(spec, target)
    return 0, presentation_payload(pres), pres.warnings


def _cmd_cohomology(doc, window, laurent):
    spec, _ = _spec_and_target(doc, window, laurent)
    pres = cohomology_presentation(spec)
    return 0, presentation_payload(pres), pres.warnings


def _cmd_form(doc, window, laurent):
    spec, target = _spec_and_target(doc, window, laurent)
    form = characteristic_form_diagonal(spec)
    if target is not None:
        form = base_change_form(form, target)
    return 0, form_payload(form), ()


def _cmd_multiply(doc, window, laurent):
    spec, target = _spec_and_target(doc, window, laurent)
    _, cl = homology_presentation(spec, target)
    factors = doc.get("factors")
    if not isinstance(factors, list) or not factors:
        raise SemanticError("multiply needs a non-empty factors list")
    product = cl.one()
    for text in factors:
        product = product * algebra_element(cl, text)
    return 0, {"factors": list(factors), "product": element_payload(product)}, ()


def _cmd_antipode(doc, window, laurent):
    spec, target = _spec_and_target(doc, window, laurent)
    _, cl = homology_presentation(spec, target)
    text = doc.get("element")
    if not isinstance(text, str):
        raise SemanticError("antipode needs an element expression")
    value = algebra_element(cl, text)
    return 0, {"element": element_payload(value), "antipode": element_payload(antipode(value))}, ()


def _cmd_derivations(doc, window, laurent):
    spec, _ = _spec_and_target(doc, window, laurent)
    module = conormal_module(spec)
    ext = CliffordAlgebra(module, zero_form(module))
    qs = [bockstein(ext, i) for i in range(ext.n)]
    leibniz = [leibniz_check(q) for q in qs]
    squares = all(compose([q, q]).is_zero() for q in qs)
    anti = all(
        compose([qs[i], qs[j]]) == compose([qs[j], qs[i]]).negated()
        for i in range(ext.n)
        for j in range(i + 1, ext.n)
    )
    rank = theta_rank(ext)
    duality = duality_square_commutes(ext)
    ok = all(leibniz) and squares and anti and rank == 2**ext.n and duality
    results = {
        "rank": ext.n,
        "leibniz": leibniz,
        "squares_zero": squares,
        "anticommute": anti,
        "theta_rank": rank,
        "theta_rank_expected": 2**ext.n,
        "duality_square": duality,
    }
    return (0 if ok else 1), results, ()


def _cmd_check_regular(doc, window, laurent):
    spec, _ = _spec_and_target(doc, window, laurent)
    report = spec.regularity
    results = {
        "regular": report.regular,
        "first_failure": report.first_failure,
        "failure_degree": report.failure_degree,
        "checked_up_to": report.checked_up_to,
    }
    if report.reason:
        results["reason"] = report.reason
    return (0 if report.regular else 1), results, ()


def _cmd_tor(doc, window, laurent):
    ring = ring_from_job(doc, window, laurent)
    first = doc.get("first")
    second = doc.get("second")
    index = doc.get("index")
    if first is None or second is None or not isinstance(index, int):
        raise SemanticError("tor needs first, second and an integer index")
    report = tor(
        ring,
        tuple(ring.parse(t) for t in first),
        tuple(ring.parse(t) for t in second),
        index,
    )
    return 0, {"index": index, "report": graded_report_payload(report)}, ()


def _ideal_lists(ring, doc):
    ideals = doc.get("ideals")
    if not isinstance(ideals, list) or not ideals:
        raise SemanticError("this command needs a non-empty ideals list")
    return [tuple(ring.parse(t) for t in block) for block in ideals]


def _cmd_condition_ii(doc, window, laurent):
    ring = ring_from_job(doc, window, laurent)
    ideals = _ideal_lists(ring, doc)
    flags = check_condition_ii(ring, ideals)
    return (0 if all(flags) else 1), {"holds": flags, "all_hold": all(flags)}, ()


def _cmd_decompose(doc, window, laurent):
    ring = ring_from_job(doc, window, laurent)
    ideals = _ideal_lists(ring, doc)
    dec = decompose_conormal(ring, ideals)
    degrees = {}
    for d, entry in sorted(dec.degrees.items()):
        degrees[str(d)] = {
            "module": module_entry_payload(entry.module),
            "summands": [module_entry_payload(s) for s in entry.summands],
            "verified": entry.verified,
        }
    return (0 if dec.verified else 1), {"degrees": degrees, "verified": dec.verified}, ()


def _pair_from_block(ring, block):
    if not isinstance(block, dict):
        raise SemanticError("pair blocks must be objects")
    entries = block.get("sequence")
    if entries is None:
        raise SemanticError("pair blocks need a sequence")
    spec = sequence_from_job(ring, entries)
    target = block.get("target")
    if target is None:
        raise SemanticError("pair blocks need a target ideal")
    tq = tuple(ring.parse(t) for t in target)
    from .ring import QuotientRing

    return make_pair(spec, QuotientRing(ring, tq), bool(block.get("multiplicative", False)))


def _cmd_naturality(doc, window, laurent):
    ring = ring_from_job(doc, window, laurent)
    source = _pair_from_block(ring, doc.get("source_pair"))
    target = _pair_from_block(ring, doc.get("target_pair"))
    morphism = PairMorphism(source, target)
    report = naturality_suite(morphism)
    _, cl_f = homology_presentation(source.source, target.target)
    _, cl_g = homology_presentation(target.source, target.target)
    amap = induced_algebra_map(cl_f, cl_g)
    results = {
        "checks": [
            {"name": name, "passed": passed, "detail": detail}
            for name, passed, detail in report.checks
        ],
        "all_pass": report.all_pass,
        "images": [repr(img) for img in amap.images],
    }
    return (0 if report.all_pass else 1), results, ()


def _cmd_scenario(doc, window, laurent):
    sc = _scenario_from(doc, window, laurent)
    pres, _ = kn_algebra(sc)
    results = {
        "p": sc.p,
        "n": sc.n,
        "window": sc.window,
        "laurent": sc.laurent,
        "ring": repr(sc.ring),
        "homology": presentation_payload(pres),
        "cohomology": presentation_payload(cohomology_presentation(sc.spec)),
        "form": form_payload(kn_form(sc)),
    }
    return 0, results, pres.warnings


_HANDLERS = {
    "presentation": _cmd_presentation,
    "cohomology": _cmd_cohomology,
    "form": _cmd_form,
    "multiply": _cmd_multiply,
    "antipode": _cmd_antipode,
    "derivations": _cmd_derivations,
    "check-regular": _cmd_check_regular,
    "tor": _cmd_tor,
    "condition-ii": _cmd_condition_ii,
    "decompose": _cmd_decompose,
    "naturality": _cmd_naturality,
    "scenario": _cmd_scenario,
}


def run_job(job: JobDescription, window=None, laurent=None) -> JobReport:
    """Dispatch one job; mathematical refutations become status-1 reports."""
    handler = _HANDLERS[job.command]
    try:
        status, results, warnings = handler(job.data, window, laurent)
    except MATH_ERRORS as err:
        return JobReport(
            job.command,
            1,
            {"refuted_by": type(err).__name__, "message": str(err)},
        )
    return JobReport(job.command, status, results, tuple(warnings))


def _render_lines(value, indent=""):
    if isinstance(value, dict):
        lines = []
        for key in value:
            sub = value[key]
            if isinstance(sub, (dict, list)):
                lines.append("%s%s:" % (indent, key))
                lines.extend(_render_lines(sub, indent + "  "))
            else:
                lines.append("%s%s: %s" % (indent, key, sub))
        return lines
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return ["%s- %s" % (indent, ", ".join(str(v) for v in value))]
        lines = []
        for v in value:
            lines.extend(_render_lines(v, indent + "  "))
        return lines
    return ["%s%s" % (indent, value)]


def render_text(report: JobReport, elapsed=None) -> str:
    lines = ["command: %s" % report.command]
    lines.append("status: %s" % ("ok" if report.status == 0 else "refuted"))
    for w in report.warnings:
        lines.append("warning: %s" % w)
    lines.extend(_render_lines(report.results))
    if elapsed is not None:
        lines.append("elapsed: %.3fs" % elapsed)
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="regquot",
        description="Run one algebra job document and print the report.",
    )
    parser.add_argument("job", help="path to a JSON job document, or - for stdin")
    parser.add_argument(
        "--json", dest="json_path", metavar="PATH", help="also write the JSON report"
    )
    parser.add_argument("--window", type=int, help="override the degree window")
    parser.add_argument("--laurent", type=int, help="override the laurent window")
    ns = parser.parse_args(argv)
    if ns.job == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(ns.job).read_text()
        except OSError as err:
            print("error[IO]: %s" % err, file=sys.stderr)
            return 2
    started = time.monotonic()
    try:
        job = parse_job(text)
        report = run_job(job, window=ns.window, laurent=ns.laurent)
    except AlgebraError as err:
        print("error[%s]: %s" % (type(err).__name__, err), file=sys.stderr)
        return 2
    print(render_text(report, time.monotonic() - started))
    if ns.json_path:
        Path(ns.json_path).write_text(canonical_json(report.payload()))
    return report.status
