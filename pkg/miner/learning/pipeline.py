import logging
from typing import Iterable, Optional

from learning.attitudes import (
    derive_incompatible_prop_action,
    derive_neutral,
    derive_prevents_mixed,
    derive_undesired_actions,
    derive_undesired_props,
    learn_desired_actions,
    learn_incompatible_props,
    learn_prevents_props,
)
from learning.base import (
    classify_propositions,
    learn_actions,
    learn_desired_props,
    learn_effects,
    learn_goal,
    learn_mandatory,
    learn_must_precede,
    learn_preconditions,
)
from learning.definitions import learn_definitions
from learning.types import KnowledgeBase
from traces.types import Atom, Corpus

logger = logging.getLogger(__name__)


def learn_knowledge_base(
    corpus: Corpus, plan_bound: Optional[int] = None, goal: Optional[Iterable[Atom]] = None
) -> KnowledgeBase:
    """
    Learn every relation from `corpus`.

    Args:
        corpus: observed behaviours of a single class
        plan_bound: plan length used to filter preventions, the longest instance by default
        goal: goal propositions to use instead of the learned ones

    Raises:
        EmptyCorpusError: if the corpus has no instance
        NoSuccessfulInstancesError: if no goal is given and every instance is a fragment
    """
    kb = KnowledgeBase()
    kb.statics, kb.fluents = classify_propositions(corpus)
    kb.actions = learn_actions(corpus)
    logger.info(
        "%s: %d statics, %d fluents, %d actions", corpus.class_id, len(kb.statics), len(kb.fluents), len(kb.actions)
    )

    kb.precond = learn_preconditions(corpus, kb.fluents)
    kb.pos_effects, kb.neg_effects = learn_effects(corpus)
    kb.goal = frozenset(goal) if goal is not None else learn_goal(corpus, kb.statics)
    kb.desired_props = learn_desired_props(kb.goal)
    logger.info("Goal: %s", ", ".join(sorted(map(str, kb.goal))) or "(none)")

    kb.incompatible = learn_incompatible_props(corpus, kb.fluents)
    kb.incompatible_prop_action = derive_incompatible_prop_action(kb)
    logger.info("%d incompatible pairs", len(kb.incompatible))

    kb.prevents = learn_prevents_props(corpus, kb.fluents, kb, plan_bound)
    kb.prevents = kb.prevents | derive_prevents_mixed(kb)
    logger.info("%d preventions", len(kb.prevents))

    # desired actions are needed to find undesired propositions, which in
    # turn exclude desired actions: the first pass ignores undesired ones
    kb.desired_actions = learn_desired_actions(kb)
    kb.undesired_props = derive_undesired_props(kb.prevents, kb.desired_entities, kb.actions)
    kb.desired_actions = learn_desired_actions(kb)
    kb.undesired_actions = derive_undesired_actions(kb)
    kb.neutral_props, kb.neutral_actions = derive_neutral(kb)
    logger.info(
        "%d desired, %d undesired, %d neutral entities",
        len(kb.desired_entities),
        len(kb.undesired_props | kb.undesired_actions),
        len(kb.neutral_props | kb.neutral_actions),
    )

    kb.must_precede = learn_must_precede(corpus, kb.fluents, kb.precond)
    kb.mandatory = learn_mandatory(corpus, kb.goal, kb.fluents)
    kb.defining = {fact.defined: fact.body for fact in learn_definitions(corpus, kb.fluents)}
    logger.info(
        "%d must-precede pairs, %d mandatory, %d definitions", len(kb.must_precede), len(kb.mandatory), len(kb.defining)
    )
    return kb
