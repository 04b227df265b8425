"""
Readable forms of Although facts: an English sentence, or one compact JSON
object per fact.
"""
from typing import Optional

from explanation.deontic import abridge
from explanation.exceptions import ExplanationFormatError
from explanation.serializers import AlthoughFactSerializer
from explanation.types import AlthoughFact, Certificate, Tag, TaggedProposition, state_term
from learning.types import KnowledgeBase
from traces.terms import display_term
from traces.utils import parse_json, render_json

RENDER_MODES = ("text", "json")

PHRASES = {
    Tag.HOLDS: "{0} holds in {1}",
    Tag.NOT_HOLDS: "{0} does not hold in {1}",
    Tag.INITIAL: "{0} is the initial state",
    Tag.NOT_INITIAL: "{0} is not the initial state",
    Tag.PRECEDES: "{0} precedes {1}",
    Tag.NEVER_BEFORE: "{0} never held before {1}",
    Tag.NEVER_PREVENTED_UPTO: "{0} was never prevented up to {1}",
    Tag.PREVENTED_AT: "{0} was prevented in {1}",
    Tag.PREVENTS: "{0} prevents {1}",
    Tag.NO_WITNESS: "{0} never held without {1} before {2}",
}


def describe(proposition: TaggedProposition) -> str:
    args = [display_term(arg) for arg in proposition.term.args]
    if proposition.tag == Tag.PRINCIPLE:
        return args[0]
    return PHRASES[proposition.tag].format(*args)


def describe_certificate(certificate: Certificate) -> str:
    principle = next(describe(tagged) for tagged in certificate if tagged.tag == Tag.PRINCIPLE)
    conditions = [describe(tagged) for tagged in certificate if tagged.tag != Tag.PRINCIPLE]
    if not conditions:
        return principle
    return f"{principle} ({', '.join(conditions)})"


def render_text(fact: AlthoughFact, kb: Optional[KnowledgeBase] = None) -> str:
    before, deviation = fact.before_cert, fact.deviation_cert
    if kb is not None:
        before, deviation = abridge(before, kb), abridge(deviation, kb)
    text = (
        f"Although {describe_certificate(before)}, the actor executed {display_term(fact.action)}, "
        f"resulting in {display_term(state_term(fact.state))} where {describe_certificate(deviation)}"
    )
    if fact.rational is not None:
        sequence = ", ".join(display_term(action) for action in fact.rational.sequence)
        text += (
            f"; however, it started [{sequence}], the shortest sequence fulfilling "
            f"{display_term(fact.rational.principle.term)}"
        )
    return text + "."


def render_explanation(fact: AlthoughFact, mode: str = "text", kb: Optional[KnowledgeBase] = None) -> str:
    """
    Render `fact` in `mode`. Text is abridged for presentation when `kb` is
    given; JSON always carries the full certificates.
    """
    if mode == "text":
        return render_text(fact, kb)
    if mode == "json":
        return render_json(AlthoughFactSerializer(fact).data).decode()
    raise ValueError(f"unknown render mode {mode!r}, expected one of {', '.join(RENDER_MODES)}")


def parse_explanation(text: str | bytes) -> AlthoughFact:
    """
    Read back a fact rendered in JSON mode.

    Raises:
        ExplanationFormatError: if the line is not a valid Although fact
    """
    serializer = AlthoughFactSerializer(data=parse_json(text, ExplanationFormatError))
    if not serializer.is_valid():
        raise ExplanationFormatError(serializer.errors)
    return serializer.save()
