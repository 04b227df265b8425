"""
Perplexing actions.

An action is perplexing when it moves the actor away from one of its
ideality principles: a fulfilled or indifferent principle becomes not
fulfilled, or a principle that was not violated becomes prevented. It is
justified when it starts the observed sequence that fulfils an equally or
more important principle in as few actions as possible.
"""
import logging
from typing import Iterable, Optional

from explanation.deontic import assess
from explanation.planner import Planner, observed_sequence
from explanation.types import AlthoughFact, Degree, IdealityPrinciple, PrincipleOrder, Rational
from learning.types import KnowledgeBase
from traces.types import BehaviorInstance
from traces.utils import transitions

logger = logging.getLogger(__name__)

# (degree before, degree after) pairs that make an action perplexing
PERPLEXING = {
    (Degree.FULFILLED, Degree.NOT_FULFILLED),
    (Degree.INDIFFERENT_STATE, Degree.NOT_FULFILLED),
    (Degree.FULFILLED, Degree.PREVENTED),
    (Degree.INDIFFERENT_STATE, Degree.PREVENTED),
    (Degree.NOT_FULFILLED, Degree.PREVENTED),
}


def derive_although4(
    instance: BehaviorInstance,
    principles: Iterable[IdealityPrinciple],
    kb: KnowledgeBase,
    order: Optional[PrincipleOrder] = None,
) -> list[AlthoughFact]:
    """Perplexing actions of `instance`, by transition then by principle importance."""
    order = order or PrincipleOrder()
    principles = sorted(set(principles), key=order.sort_key)
    facts = []
    for before, action, after in transitions(instance):
        for principle in principles:
            earlier = assess(principle, instance, before.index, kb)
            later = assess(principle, instance, after.index, kb)
            if (earlier.degree, later.degree) in PERPLEXING:
                facts.append(AlthoughFact(earlier.certificate, action, after.index, later.certificate))
    return facts


def derive_although5(
    a4: AlthoughFact,
    instance: BehaviorInstance,
    principles: Iterable[IdealityPrinciple],
    order: PrincipleOrder,
    kb: KnowledgeBase,
    planner: Optional[Planner] = None,
) -> list[AlthoughFact]:
    """
    Rationals for a perplexing action: principles at least as important as
    the threatened one, not fulfilled before the action, whose observed
    fulfilling sequence starts with the action and is as short as an
    optimal plan.
    """
    planner = planner or Planner(kb)
    start = a4.state - 1
    threatened = a4.threatened
    facts = []
    for principle in sorted(set(principles), key=order.sort_key):
        if not order.at_most_as_important(threatened, principle):
            continue
        if assess(principle, instance, start, kb).degree == Degree.FULFILLED:
            continue
        observed = observed_sequence(principle, instance, start, kb)
        if not observed or observed[0] != a4.action:
            continue
        optimum = planner.optimum_sequence(principle, instance, start)
        if optimum is None or optimum.length != len(observed):
            logger.debug("%s after s%d: %d observed actions is not optimal", principle, start, len(observed))
            continue
        facts.append(a4._replace(rational=Rational(principle, tuple(observed))))
    return facts


def derive_explanations(
    instance: BehaviorInstance,
    principles: Iterable[IdealityPrinciple],
    order: PrincipleOrder,
    kb: KnowledgeBase,
) -> list[AlthoughFact]:
    """Every perplexing action of `instance`, followed by every justified one."""
    principles = tuple(principles)
    a4_facts = derive_although4(instance, principles, kb, order)
    planner = Planner(kb)
    a5_facts = [fact for a4 in a4_facts for fact in derive_although5(a4, instance, principles, order, kb, planner)]
    logger.info("%s: %d perplexing actions, %d with a rational", instance.id, len(a4_facts), len(a5_facts))
    return a4_facts + a5_facts
