"""Decomposition plans: prompt rendering, output parsing, and `#n` resolution.

A plan is an ordered list of sub-questions. A sub-question may embed tokens
of the form ``#n`` that refer to the answer of an earlier sub-question; only
back-references are legal. The planner is asked for raw lines with no
numbering, but the parser strips common enumeration decorations anyway
because instruct models routinely add them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from apexsearch.errors import (
    EmptyPlanError,
    InvalidInputError,
    InvalidReferenceError,
    PlanTooLongError,
    UnresolvedReferenceError,
)

DEFAULT_MAX_SUBQUESTIONS = 6

PLANNING_PROMPT_TEMPLATE = (
    "You are an assistant who is good at decomposing complex problems into simple sub-problems.\n"
    "1. Please decompose the problem directly into 2-4 sub-problems, with each sub-problem on a "
    "new line, separated by '\\n'. Do not add any serial numbers.\n"
    "2. Use '#1', '#2', etc. to refer to the answers of previous sub-problems, where '#1' "
    "represents the answer to the first sub-problem, for example, 'What city is #1 from?' "
    "represents asking which country the answer to the first sub-question comes from.\n"
    "3. Generally, the answer to the last sub-problem should be the final answer to this "
    "complex question.\n"
    "The question you need to break down is:"
)

REF_TOKEN = re.compile(r"#(\d+)")

# "1. ", "1) " (space optional after the parenthesis form) or "- " bullets.
_DECORATION = re.compile(r"^(?:\d+\.\s+|\d+\)\s*|-\s+)")


@dataclass(frozen=True)
class SubQuestion:
    """One step of a plan: 1-based index, template text, referenced indices."""

    index: int
    template: str
    refs: frozenset[int]


@dataclass(frozen=True)
class Plan:
    """An ordered decomposition; ``source_text`` keeps the raw model output."""

    subs: tuple[SubQuestion, ...]
    source_text: str


def render_planning_prompt(question: str) -> str:
    """Render the decomposition prompt with ``question`` appended on its own line."""
    if not question:
        raise InvalidInputError("question must be non-empty")
    return PLANNING_PROMPT_TEMPLATE + "\n" + question


def _strip_decorations(line: str) -> str:
    # Applied to fixpoint so "1. 2. foo" cannot survive one level of nesting
    # and round-tripping a parsed template never re-strips anything.
    while True:
        stripped = _DECORATION.sub("", line, count=1).strip()
        if stripped == line:
            return line
        line = stripped


def parse_plan(raw: str, max_subquestions: int = DEFAULT_MAX_SUBQUESTIONS) -> Plan:
    """Parse a planner response into a validated Plan.

    One sub-question per non-blank line; enumeration decorations are stripped
    defensively. Raises EmptyPlanError / PlanTooLongError /
    InvalidReferenceError (forward or self reference) accordingly.
    """
    templates = []
    for line in raw.splitlines():
        cleaned = _strip_decorations(line.strip())
        if cleaned:
            templates.append(cleaned)

    if not templates:
        raise EmptyPlanError("planner output contains no sub-questions")
    if len(templates) > max_subquestions:
        raise PlanTooLongError(
            f"plan has {len(templates)} sub-questions, cap is {max_subquestions}"
        )

    subs = []
    for index, template in enumerate(templates, start=1):
        refs = frozenset(int(m) for m in REF_TOKEN.findall(template))
        for r in refs:
            if r >= index:
                raise InvalidReferenceError(
                    f"sub-question {index} references #{r}: only earlier answers may be "
                    f"referenced (line: {template!r})",
                    line=template,
                )
            if r < 1:
                raise InvalidReferenceError(
                    f"sub-question {index} references #{r}: indices are 1-based "
                    f"(line: {template!r})",
                    line=template,
                )
        subs.append(SubQuestion(index=index, template=template, refs=refs))

    return Plan(subs=tuple(subs), source_text=raw)


def single_step_plan(question: str, source_text: str = "") -> Plan:
    """Degraded one-step plan used when decomposition fails or is unusable."""
    sub = SubQuestion(index=1, template=question, refs=frozenset())
    return Plan(subs=(sub,), source_text=source_text or question)


def resolve_references(sub: SubQuestion, answers: list[str]) -> str:
    """Substitute every ``#r`` in the template with ``answers[r-1]``.

    Single pass: reference tokens inside substituted answers are left alone.
    """
    for r in sorted(sub.refs):
        if r > len(answers) or not answers[r - 1].strip():
            raise UnresolvedReferenceError(
                f"sub-question {sub.index} references #{r} but no answer is available",
                ref=r,
            )

    if not sub.refs:
        return sub.template

    def substitute(match: re.Match) -> str:
        r = int(match.group(1))
        return answers[r - 1] if r in sub.refs else match.group(0)

    return REF_TOKEN.sub(substitute, sub.template)


def serialize_plan(plan: Plan) -> str:
    """Plan templates joined by newlines (the planner's own output grammar)."""
    return "\n".join(s.template for s in plan.subs)
