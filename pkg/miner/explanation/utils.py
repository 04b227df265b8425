from pathlib import Path
from typing import Iterable

from explanation.exceptions import PrinciplesFormatError, UnknownInstanceError
from explanation.rendering import render_explanation
from explanation.serializers import PrinciplesConfigSerializer
from explanation.types import AlthoughFact, IdealityPrinciple, PrincipleOrder
from learning.types import KnowledgeBase
from traces.types import BehaviorInstance, Corpus
from traces.utils import parse_json


def parse_principles(content: str | bytes) -> tuple[list[IdealityPrinciple], PrincipleOrder]:
    """
    Raises:
        PrinciplesFormatError: on malformed JSON, unknown principles or ranks of unlisted principles
    """
    serializer = PrinciplesConfigSerializer(data=parse_json(content, PrinciplesFormatError))
    if not serializer.is_valid():
        raise PrinciplesFormatError(serializer.errors)
    return serializer.save()


def read_principles(path: Path) -> tuple[list[IdealityPrinciple], PrincipleOrder]:
    return parse_principles(Path(path).read_bytes())


def find_instance(corpus: Corpus, instance_id: str) -> BehaviorInstance:
    try:
        return corpus.get_instance(instance_id)
    except KeyError:
        raise UnknownInstanceError(f"no instance {instance_id!r} in corpus {corpus.class_id!r}") from None


def learned_principles(kb: KnowledgeBase) -> list[IdealityPrinciple]:
    """Principles stated by the knowledge base itself: its attitudes, mandatory propositions and orderings."""
    principles = [IdealityPrinciple.desired(atom) for atom in kb.desired_props & kb.fluents]
    principles += [IdealityPrinciple.undesired(atom) for atom in kb.undesired_props & kb.fluents]
    principles += [IdealityPrinciple.mandatory(atom) for atom in kb.mandatory & kb.fluents]
    principles += [IdealityPrinciple.must_precede(first, second) for first, second in kb.must_precede]
    return sorted(principles, key=str)


def render_explanations(facts: Iterable[AlthoughFact], mode: str, kb: KnowledgeBase) -> str:
    """One rendered fact per line."""
    return "".join(render_explanation(fact, mode, kb) + "\n" for fact in facts)
