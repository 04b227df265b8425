"""
Attitudes towards entities (desired, undesired, neutral) and the exclusion
relations between them (incompatibility and prevention).
"""
import itertools
import logging
from collections import defaultdict
from typing import Optional

from django.conf import settings
from explanation.planner import Planner
from learning.base import first_occurrences, last_occurrences
from learning.types import AtomCouple, AtomPair, Entity, EntityPair, KnowledgeBase
from traces.terms import sort_terms
from traces.types import ActionTerm, Atom, Corpus, Props

logger = logging.getLogger(__name__)


def learn_desired_actions(kb: KnowledgeBase) -> frozenset[ActionTerm]:
    """Actions adding a desired proposition while adding nothing undesired and deleting nothing desired."""
    return frozenset(
        action
        for action in kb.actions
        if kb.pos_effects.get(action, frozenset()) & kb.desired_props
        and not kb.pos_effects.get(action, frozenset()) & kb.undesired_props
        and not kb.neg_effects.get(action, frozenset()) & kb.desired_props
    )


def derive_undesired_props(
    prevents: frozenset[EntityPair], desired_entities: frozenset[Entity], actions: frozenset[ActionTerm] = frozenset()
) -> frozenset[Atom]:
    """
    Propositions preventing a desired entity other than themselves. A
    proposition that is itself desired stays desired.
    """
    undesired = {
        first
        for first, second in prevents
        if first != second and second in desired_entities and first not in actions
    }
    conflicts = undesired & desired_entities
    if conflicts:
        logger.warning("Desired propositions prevent desired entities: %s", ", ".join(sort_terms_text(conflicts)))
    return frozenset(undesired - conflicts)


def derive_undesired_actions(kb: KnowledgeBase) -> frozenset[ActionTerm]:
    return frozenset(action for action in kb.actions if kb.pos_effects.get(action, frozenset()) & kb.undesired_props)


def derive_neutral(kb: KnowledgeBase) -> tuple[frozenset[Atom], frozenset[ActionTerm]]:
    return (
        kb.fluents - kb.desired_props - kb.undesired_props,
        kb.actions - kb.desired_actions - kb.undesired_actions,
    )


def learn_incompatible_props(corpus: Corpus, fluents: Props) -> frozenset[AtomCouple]:
    """Pairs of observed fluents that never hold in the same state."""
    co_occurring = set()
    observed = set()
    for state in corpus.states():
        props = sort_terms(state.props & fluents)
        observed.update(props)
        co_occurring.update(itertools.combinations(props, 2))
    return frozenset(
        frozenset(pair) for pair in itertools.combinations(sort_terms(observed), 2) if pair not in co_occurring
    )


def derive_incompatible_prop_action(kb: KnowledgeBase) -> frozenset[tuple[Atom, ActionTerm]]:
    """(p, a) such that p is incompatible with one of a's preconditions."""
    partners = defaultdict(set)
    for couple in kb.incompatible:
        first, second = tuple(couple)
        partners[first].add(second)
        partners[second].add(first)
    return frozenset(
        (prop, action)
        for action in kb.actions
        for precondition in kb.precond.get(action, frozenset())
        for prop in partners[precondition]
    )


def learn_prevents_candidates(corpus: Corpus, fluents: Props) -> frozenset[AtomPair]:
    """
    First stage: (p1, p2) such that p2 never holds in a state strictly after
    a state holding p1. A proposition may prevent itself.
    """
    observed = sort_terms(frozenset().union(*(state.props for state in corpus.states())) & fluents)
    occurrences = [(first_occurrences(instance), last_occurrences(instance)) for instance in corpus]
    return frozenset(
        (first, second)
        for first, second in itertools.product(observed, repeat=2)
        if all(
            first not in firsts or second not in lasts or firsts[first] >= lasts[second]
            for firsts, lasts in occurrences
        )
    )


def learn_prevents_props(
    corpus: Corpus, fluents: Props, kb: KnowledgeBase, bound: Optional[int] = None
) -> frozenset[AtomPair]:
    """
    Second stage drops every candidate (p1, p2) for which a plan of at most
    `bound` observed actions leads from an observed p1-state to a p2-state.
    For a self-prevention the plan has to make the proposition occur again.
    """
    if bound is None:
        bound = settings.PREVENTS_PLAN_BOUND
    if bound is None:
        bound = corpus.max_length

    candidates = learn_prevents_candidates(corpus, fluents)
    logger.info("%d prevention candidates before planning (bound %d)", len(candidates), bound)

    targets = defaultdict(set)
    for first, second in candidates:
        targets[first].add(second)
    starts = defaultdict(set)
    for state in corpus.states():
        for atom in state.props.intersection(targets):
            starts[atom].add(state.props)

    planner = Planner(kb)
    survivors = set()
    for first in sort_terms(targets):
        remaining = targets[first]
        for start in sorted(starts[first], key=lambda props: sort_terms_text(props)):
            reachable = planner.reachable_atoms(start, bound)
            remaining = {
                second
                for second in remaining
                if (second == first and planner.bounded_reach(start, first, bound, reoccur=True) is None)
                or (second != first and second not in reachable)
            }
            if not remaining:
                break
        survivors.update((first, second) for second in remaining)
        logger.debug("%s prevents %s", first, ", ".join(sort_terms_text(remaining)) or "nothing")
    return frozenset(survivors)


def derive_prevents_mixed(kb: KnowledgeBase) -> frozenset[EntityPair]:
    """
    Preventions involving actions, from the proposition ones in `kb.prevents`:
    a proposition prevents an action when it prevents one of its
    preconditions; an action prevents an entity when one of its positive
    effects is incompatible with, and prevents, that entity.
    """
    props_prevents = kb.prevents_props
    prop_action = {
        (prop, action)
        for prop, target in props_prevents
        for action in kb.actions
        if target in kb.precond.get(action, frozenset())
    }
    action_action = {
        (first, second)
        for first in kb.actions
        for effect in kb.pos_effects.get(first, frozenset())
        for second in kb.actions
        if (effect, second) in kb.incompatible_prop_action and (effect, second) in prop_action
    }
    action_prop = {
        (action, target)
        for action in kb.actions
        for effect in kb.pos_effects.get(action, frozenset())
        for preventer, target in props_prevents
        if preventer == effect and kb.are_incompatible(effect, target)
    }
    return frozenset(prop_action | action_action | action_prop)


def sort_terms_text(terms) -> list[str]:
    return [str(term) for term in sort_terms(terms)]
