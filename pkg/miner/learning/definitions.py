import logging

from learning.types import DefiningFact
from traces.terms import sort_terms
from traces.types import Atom, Corpus, Props

logger = logging.getLogger(__name__)


def co_occurring_props(corpus: Corpus, fluents: Props) -> dict[Atom, Props]:
    """For every fluent, the other fluents holding in every state where it holds."""
    co_occurring = {}
    for state in corpus.states():
        props = state.props & fluents
        for atom in props:
            co_occurring[atom] = co_occurring[atom] & props if atom in co_occurring else props
    return {atom: props - {atom} for atom, props in co_occurring.items()}


def learn_definitions(corpus: Corpus, fluents: Props) -> list[DefiningFact]:
    """
    Propositions equivalent to the conjunction of the propositions always
    co-occurring with them.

    Atoms that define each other are ambiguous and get no definition. Bodies
    are then stripped of atoms that have a definition of their own.
    """
    candidates = {atom: body for atom, body in co_occurring_props(corpus, fluents).items() if body}
    ambiguous = {atom for atom, body in candidates.items() if any(atom in candidates.get(other, ()) for other in body)}
    if ambiguous:
        logger.warning("Ambiguous mutual definitions left out: %s", ", ".join(map(str, sort_terms(ambiguous))))

    surviving = {atom: body for atom, body in candidates.items() if atom not in ambiguous}
    facts = []
    for atom in sort_terms(surviving):
        body = surviving[atom] - frozenset(surviving)
        if body:
            facts.append(DefiningFact(atom, body))
    return facts
