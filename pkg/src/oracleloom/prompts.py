"""Prompt templates and the section envelope.

Two fixed structures drive every report: a four-clause system persona and
an eight-step instruction sequence, one completion call per step. Model
output is machine-checkable because each step must wrap its text in
``<<SECTION:id>> ... <<END>>`` markers; that grammar is a public contract
shared with the offline stub provider and the report assembler.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import BudgetExceeded, EmptyClause, MalformedMarkers, MissingSection, ValidationError
from .model import AnalysisRequest
from .records import DailyRecord

SECTION_IDS = (
    "introduction",
    "summary",
    "cause_analysis",
    "risk_assessment",
    "policy_suggestions",
    "associated_words",
    "conclusion",
    "chart_data",
)

SECTION_OPEN = "<<SECTION:{sid}>>"
SECTION_CLOSE = "<<END>>"
NO_DATA_TEXT = "No matching documents were found for this period."

_MARKER_RE = re.compile(r"<<SECTION:([a-z_]+)>>|<<END>>")


@dataclass(frozen=True)
class RolePrompt:
    """Persona in four clauses: who the model is, what it must do, how it
    must treat context, and what binds it to the user's request."""

    dramaturgical: str
    goal_oriented: str
    normative: str
    communicative: str

    def __post_init__(self) -> None:
        for name in ("dramaturgical", "goal_oriented", "normative", "communicative"):
            if not getattr(self, name).strip():
                raise EmptyClause(f"role prompt clause {name} is empty")

    def clauses(self) -> tuple[str, str, str, str]:
        return (self.dramaturgical, self.goal_oriented, self.normative, self.communicative)


DEFAULT_ROLE = RolePrompt(
    dramaturgical=(
        "You are a public opinion analysis expert with strong research and "
        "analytical capabilities and a deep understanding of the market sales "
        "field and related events."
    ),
    goal_oriented=(
        "Conduct sentiment and content analysis to provide positive and "
        "negative evaluations of public opinion."
    ),
    normative=(
        "Interpret public opinion information in the correct context and pay "
        "attention to data collection and analysis details to ensure "
        "information accuracy."
    ),
    communicative="You must produce reports based on user input requirements.",
)


def render_role_prompt(role: RolePrompt = DEFAULT_ROLE) -> str:
    return "\n".join(f"{i}. {clause}" for i, clause in enumerate(role.clauses(), start=1))


@dataclass(frozen=True)
class ThinkingStep:
    index: int
    instruction: str
    expected_sections: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not 1 <= self.index <= 8:
            raise ValidationError(f"step index out of range: {self.index}")
        for sid in self.expected_sections:
            if sid not in SECTION_IDS:
                raise ValidationError(f"unknown section id: {sid}")


THINKING_STEPS: tuple[ThinkingStep, ...] = (
    ThinkingStep(
        1,
        "Please summarize reports on keywords and synonyms.",
        ("introduction",),
    ),
    ThinkingStep(
        2,
        "Compare, dissect, and analyze these emotional pieces of information, "
        "summarizing public opinion, and give an overall evaluation of the "
        "current sentiment state.",
        ("summary",),
    ),
    ThinkingStep(
        3,
        "Analyze and output the causes and potential impacts of the current "
        "sentiment state.",
        ("cause_analysis",),
    ),
    ThinkingStep(
        4,
        "Provide risk warnings and improvement suggestions based on the "
        "current public sentiment.",
        ("risk_assessment", "policy_suggestions"),
    ),
    # Presentation pass: refines earlier bodies in place, no new sections.
    ThinkingStep(
        5,
        "Separately analyze the causes and trends of the current emotions, "
        "adding corresponding titles at the beginning of paragraphs.",
        (),
    ),
    ThinkingStep(
        6,
        "Complete conclusions, associated words, and other elements.",
        ("conclusion", "associated_words"),
    ),
    # Chart figures are rendered locally from structured data, so this step
    # asks for the data block back rather than calling any image service.
    ThinkingStep(
        7,
        "Output the emotion distribution chart data as JSON, exactly as "
        "provided in the CHART DATA JSON block.",
        ("chart_data",),
    ),
    ThinkingStep(
        8,
        "Final Check: Please think step by step, do not output the thought "
        "process, and do not explain the output logic.",
        (),
    ),
)

FINAL_CHECK_TAIL = "do not explain the output logic."


def estimate_tokens(text: str) -> int:
    return len(text.split())


def _format_signed(value: float) -> str:
    return f"{value:+.4f}"


def excerpt_records(records: Sequence[DailyRecord], max_chars: int) -> str:
    """Compact per-day history, newest first, cut at a line boundary."""
    if max_chars < 200:
        raise ValidationError("max_chars must be >= 200")
    lines: list[str] = []
    for rec in sorted(records, key=lambda r: r.day, reverse=True):
        terms = ",".join(t for t, _ in rec.top_terms[:3])
        line = "|".join(
            (
                rec.day.isoformat(),
                _format_signed(rec.combined.score),
                _format_signed(rec.combined.polarity),
                f"{rec.combined.subjectivity:.4f}",
                terms,
            )
        )
        if len("\n".join(lines + [line])) > max_chars:
            break
        lines.append(line)
    return "\n".join(lines)


def excerpt_documents(docs: Sequence, max_docs: int = 12, snippet_chars: int = 200) -> str:
    """One pipe-separated line per document; bodies clipped at a word
    boundary so prompts stay inside budget."""
    lines = []
    for doc in docs[:max_docs]:
        body = " ".join(doc.body.split())
        if len(body) > snippet_chars:
            body = body[:snippet_chars].rsplit(" ", 1)[0] + "..."
        title = " ".join(doc.title.split()) or "(untitled)"
        ts = doc.published_at or doc.fetched_at
        lines.append(
            f"- {ts.date().isoformat()} {doc.source_id} | {title} | {body} | {doc.url}"
        )
    return "\n".join(lines)


def _output_format_block(expected: Sequence[str]) -> str:
    if not expected:
        return (
            "OUTPUT FORMAT:\nNo sections are required from this step. Apply "
            "the instruction to your working state and reply with the single "
            "word OK."
        )
    parts = ["OUTPUT FORMAT:", "Emit exactly these sections, each wrapped in its markers:"]
    for sid in expected:
        parts.append(SECTION_OPEN.format(sid=sid))
        parts.append(f"(text of {sid})")
        parts.append(SECTION_CLOSE)
    return "\n".join(parts)


def render_step_prompt(
    step: ThinkingStep,
    request: AnalysisRequest,
    records_excerpt: str,
    docs_excerpt: str,
    *,
    role: RolePrompt = DEFAULT_ROLE,
    chart_json: str = "",
    top_terms: Sequence[str] = (),
) -> str:
    parts = [
        render_role_prompt(role),
        "",
        f"TASK (step {step.index} of 8): {step.instruction}",
        "",
        f"KEYWORD: {request.keyword}",
        f"SYNONYMS: {', '.join(request.synonyms) if request.synonyms else '(none)'}",
        f"WINDOW: {request.window.start.isoformat()}..{request.window.end.isoformat()}",
        f"KIND: {request.kind.value}",
    ]
    if request.url:
        parts.append(f"URL: {request.url}")
    parts += [
        "",
        "RECORD HISTORY (newest first):",
        records_excerpt or "(none)",
        "",
        "DOCUMENTS:",
        docs_excerpt or "(none)",
    ]
    if top_terms:
        parts += ["", f"TOP TERMS: {', '.join(top_terms)}"]
    if step.index == 7:
        parts += ["", "CHART DATA JSON:", chart_json or "{}"]
    parts += ["", _output_format_block(step.expected_sections)]
    return "\n".join(parts)


def render_thinking_steps(
    request: AnalysisRequest,
    records_excerpt: str,
    docs_excerpt: str,
    *,
    role: RolePrompt = DEFAULT_ROLE,
    chart_json: str = "",
    top_terms: Sequence[str] = (),
    max_prompt_tokens: int | None = None,
) -> list[tuple[ThinkingStep, str]]:
    """All eight prompts, in order. Budget is checked up front so an
    oversized context fails before any provider call."""
    out = []
    for step in THINKING_STEPS:
        prompt = render_step_prompt(
            step,
            request,
            records_excerpt,
            docs_excerpt,
            role=role,
            chart_json=chart_json,
            top_terms=top_terms,
        )
        if max_prompt_tokens is not None:
            estimate = estimate_tokens(prompt)
            if estimate > max_prompt_tokens:
                raise BudgetExceeded(
                    f"step {step.index} prompt estimated at {estimate} tokens, "
                    f"budget {max_prompt_tokens}"
                )
        out.append((step, prompt))
    return out


CORRECTIVE_SENTENCE = (
    "Your previous reply was missing required sections: {missing}. Emit every "
    "required section exactly once using the markers shown under OUTPUT FORMAT."
)


def corrective_suffix(missing: Sequence[str]) -> str:
    return CORRECTIVE_SENTENCE.format(missing=", ".join(missing))


def parse_sections(llm_output: str, expected: Sequence[str]) -> dict[str, str]:
    """Pull marker-delimited bodies out of model output.

    The walk is strict: nesting, stray closers, duplicates, and sections
    that were not asked for all reject the output.
    """
    found: dict[str, str] = {}
    open_id: str | None = None
    open_end = 0
    for match in _MARKER_RE.finditer(llm_output):
        if match.group(1) is not None:
            if open_id is not None:
                raise MalformedMarkers(f"section {match.group(1)} opened inside {open_id}")
            open_id = match.group(1)
            open_end = match.end()
        else:
            if open_id is None:
                raise MalformedMarkers("close marker without an open section")
            if open_id in found:
                raise MalformedMarkers(f"duplicate section {open_id}")
            if open_id not in expected:
                raise MalformedMarkers(f"unexpected section {open_id}")
            found[open_id] = llm_output[open_end : match.start()].strip()
            open_id = None
    if open_id is not None:
        raise MalformedMarkers(f"section {open_id} never closed")
    missing = [sid for sid in expected if sid not in found]
    if missing:
        raise MissingSection(missing)
    return found


@dataclass
class SectionEnvelope:
    """Accumulates section bodies across steps into one report payload."""

    sections: dict[str, str] = field(default_factory=dict)

    def merge(self, fragment: Mapping[str, str]) -> None:
        for sid, body in fragment.items():
            if sid not in SECTION_IDS:
                raise ValidationError(f"unknown section id: {sid}")
            if sid in self.sections:
                raise ValidationError(f"section {sid} already filled")
            self.sections[sid] = body

    def missing(self) -> list[str]:
        return [sid for sid in SECTION_IDS if sid not in self.sections]

    def is_complete(self) -> bool:
        return not self.missing()


def required_sections(prompt: str) -> list[str]:
    """Section ids a rendered prompt asks for, in order. Shared with the
    stub provider, which answers whatever the prompt demands."""
    seen: list[str] = []
    for match in re.finditer(r"<<SECTION:([a-z_]+)>>", prompt):
        sid = match.group(1)
        if sid not in seen:
            seen.append(sid)
    return seen
