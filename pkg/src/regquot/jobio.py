"""Job documents for the batch interface.

A job is a single JSON object with a ``command`` plus the blocks that
command needs: a ``ring`` (base, generators, optional relations), a
``sequence`` of element expressions with optional obstructions, an
optional ``target`` ideal, a ``window`` block, or a named ``scenario``.
Reports are rendered to canonical JSON with sorted keys so identical
inputs produce identical bytes; timing never enters the JSON form.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .conormal import ProductToken, QuotientRingSpec
from .errors import ParseError, SemanticError
from .ring import GradedRing, Generator, QuotientRing
from .scalars import BaseRing

COMMANDS = (
    "presentation",
    "cohomology",
    "form",
    "multiply",
    "antipode",
    "derivations",
    "check-regular",
    "tor",
    "condition-ii",
    "decompose",
    "naturality",
    "scenario",
)

_BASE_PATTERNS = (
    (re.compile(r"^Z$"), lambda m: BaseRing.integers()),
    (re.compile(r"^F(\d+)$"), lambda m: BaseRing.prime_field(int(m.group(1)))),
    (re.compile(r"^Z/(\d+)$"), lambda m: BaseRing.integers_mod(int(m.group(1)))),
    (
        re.compile(r"^Z_\((\d+)\)$"),
        lambda m: BaseRing.integers_localized(int(m.group(1))),
    ),
)


def base_ring_from_name(name) -> BaseRing:
    if not isinstance(name, str):
        raise SemanticError("base ring name must be a string")
    for pattern, build in _BASE_PATTERNS:
        m = pattern.match(name)
        if m:
            return build(m)
    raise SemanticError(
        "unknown base ring %r (expected Z, F<p>, Z/<m> or Z_(<p>))" % (name,)
    )


@dataclass
class JobDescription:
    command: str
    data: dict

    def window_degree(self):
        return self.data.get("window", {}).get("degree")

    def window_laurent(self):
        return self.data.get("window", {}).get("laurent")

    def render(self) -> str:
        return canonical_json(self.data)


def parse_job(text: str) -> JobDescription:
    """Parse and structurally validate one job document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, err.lineno, err.colno)
    if not isinstance(doc, dict):
        raise ParseError("job document must be a JSON object")
    command = doc.get("command")
    if command is None:
        raise SemanticError("job is missing the command field")
    if command not in COMMANDS:
        raise SemanticError(
            "unknown command %r (expected one of %s)" % (command, ", ".join(COMMANDS))
        )
    window = doc.get("window", {})
    if not isinstance(window, dict):
        raise SemanticError("window block must be an object")
    for key in ("degree", "laurent"):
        if key in window and (not isinstance(window[key], int) or window[key] < 0):
            raise SemanticError("window %s must be a non-negative integer" % key)
    ring = doc.get("ring")
    if ring is not None:
        if not isinstance(ring, dict) or "base" not in ring:
            raise SemanticError("ring block needs a base field")
        base_ring_from_name(ring["base"])
        for gen in ring.get("generators", ()):
            if not isinstance(gen, dict) or "name" not in gen or "degree" not in gen:
                raise SemanticError("each generator needs a name and a degree")
            if not str(gen["name"]).isidentifier():
                raise SemanticError("generator name %r is not an identifier" % gen["name"])
            if not isinstance(gen["degree"], int) or gen["degree"] % 2 or gen["degree"] < 0:
                raise SemanticError(
                    "generator %s has degree %r; degrees must be even and >= 0"
                    % (gen["name"], gen["degree"])
                )
    scenario = doc.get("scenario")
    if scenario is not None:
        if not isinstance(scenario, dict):
            raise SemanticError("scenario block must be an object")
        for key in ("p", "n"):
            if not isinstance(scenario.get(key), int):
                raise SemanticError("scenario needs integer p and n")
    return JobDescription(command, doc)


def ring_from_job(doc: dict, window=None, laurent=None) -> GradedRing:
    block = doc.get("ring")
    if block is None:
        raise SemanticError("this command needs a ring block")
    base = base_ring_from_name(block["base"])
    gens = [
        Generator(g["name"], g["degree"], bool(g.get("invertible", False)))
        for g in block.get("generators", ())
    ]
    degree = window if window is not None else doc.get("window", {}).get("degree", 8)
    laur = laurent if laurent is not None else doc.get("window", {}).get("laurent", 2)
    ring = GradedRing(base, gens, degree_window=degree, laurent_window=laur)
    relations = block.get("relations", ())
    if relations:
        parsed = [ring.parse(r) for r in relations]
        ring = GradedRing(
            base, gens, degree_window=degree, laurent_window=laur, relations=parsed
        )
    return ring


def sequence_from_job(ring: GradedRing, entries) -> QuotientRingSpec:
    elements = []
    tokens = []
    has_token = False
    for item in entries:
        if isinstance(item, str):
            item = {"element": item}
        if not isinstance(item, dict) or "element" not in item:
            raise SemanticError("sequence entries need an element expression")
        x = ring.parse(item["element"])
        elements.append(x)
        obstruction = item.get("obstruction")
        if obstruction in (None, 0, "0"):
            tokens.append(ProductToken(x))
        else:
            tokens.append(ProductToken(x, ring.parse(obstruction)))
            has_token = True
    if has_token:
        return QuotientRingSpec(ring, elements, tokens)
    return QuotientRingSpec(ring, elements)


def spec_from_job(ring: GradedRing, doc: dict) -> QuotientRingSpec:
    entries = doc.get("sequence")
    if entries is None:
        raise SemanticError("this command needs a sequence block")
    return sequence_from_job(ring, entries)


def target_from_job(ring: GradedRing, doc: dict):
    entries = doc.get("target")
    if entries is None:
        return None
    return QuotientRing(ring, tuple(ring.parse(t) for t in entries))


# -- payload builders --------------------------------------------------


def presentation_payload(pres) -> dict:
    return {
        "kind": pres.kind,
        "generators": [[name, degree] for name, degree in pres.generators],
        "relations": list(pres.relations),
        "display": pres.display,
    }


def form_payload(form) -> dict:
    return {
        "size": form.module.rank,
        "degrees": list(form.module.degrees),
        "entries": [[repr(e) for e in row] for row in form.entries],
        "diagonal": form.is_diagonal(),
        "zero": form.is_zero(),
    }


def element_payload(elem) -> dict:
    coeff = elem.owner.coeff
    terms = [
        {"word": list(w), "coeff": coeff.render(c)}
        for w, c in sorted(elem.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]
    return {"display": repr(elem), "terms": terms}


def module_entry_payload(entry) -> dict:
    return {"free_rank": entry.free_rank, "factors": list(entry.factors)}


def graded_report_payload(report) -> dict:
    return {
        "scanned": list(report.scanned),
        "entries": {
            str(d): {"free_rank": e["free_rank"], "factors": e["factors"]}
            for d, e in report.as_dict().items()
        },
    }


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
