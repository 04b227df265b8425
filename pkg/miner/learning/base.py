"""
Prerequisite relations: proposition and action classification, action
models, goals, precedence, mandatory propositions and the per-instance
Achieved/Contributed relations.
"""
import itertools

from learning.exceptions import EmptyCorpusError, NoSuccessfulInstancesError
from learning.types import AchievedFact, ActionModels, AtomPair, ContributedFact
from traces.types import ActionTerm, Atom, BehaviorInstance, Corpus, Props
from traces.utils import corpus_transitions, transitions


def classify_propositions(corpus: Corpus) -> tuple[Props, Props]:
    """
    Split the observed atoms into statics, true in every state of every
    instance, and fluents.

    Raises:
        EmptyCorpusError: if the corpus has no instance
    """
    if not len(corpus):
        raise EmptyCorpusError(f"corpus {corpus.class_id!r} has no instances")
    states = [state.props for state in corpus.states()]
    observed = frozenset().union(*states)
    statics = frozenset.intersection(*states)
    return statics, observed - statics


def learn_actions(corpus: Corpus) -> frozenset[ActionTerm]:
    return frozenset(action for instance in corpus for action in instance.actions)


def _intersect(models: dict, action: ActionTerm, props: Props):
    models[action] = models[action] & props if action in models else props


def learn_preconditions(corpus: Corpus, fluents: Props) -> ActionModels:
    precond = {}
    for transition in corpus_transitions(corpus):
        _intersect(precond, transition.action, transition.before.props & fluents)
    return precond


def learn_effects(corpus: Corpus) -> tuple[ActionModels, ActionModels]:
    pos_effects, neg_effects = {}, {}
    for before, action, after in corpus_transitions(corpus):
        _intersect(pos_effects, action, after.props - before.props)
        _intersect(neg_effects, action, before.props - after.props)
    return pos_effects, neg_effects


def learn_goal(corpus: Corpus, statics: Props) -> Props:
    """
    Raises:
        NoSuccessfulInstancesError: if every instance is a fragment
    """
    finals = [instance.final_state.props for instance in corpus if instance.successful]
    if not finals:
        raise NoSuccessfulInstancesError(f"corpus {corpus.class_id!r} has no successful instance")
    return frozenset.intersection(*finals) - statics


def learn_desired_props(goal: Props) -> Props:
    return frozenset(goal)


def first_occurrences(instance: BehaviorInstance) -> dict[Atom, int]:
    first = {}
    for state in instance.states:
        for atom in state.props:
            first.setdefault(atom, state.index)
    return first


def last_occurrences(instance: BehaviorInstance) -> dict[Atom, int]:
    return {atom: state.index for state in instance.states for atom in state.props}


def _precondition_chain(instance: BehaviorInstance, precond: ActionModels, atom: Atom, start: int, end: int) -> bool:
    """Whether `atom` is a precondition of an action executed between states `start` and `end`."""
    return any(atom in precond.get(action, ()) for action in instance.actions[start:end])


def learn_must_precede(corpus: Corpus, fluents: Props, precond: ActionModels) -> frozenset[AtomPair]:
    """
    (p1, p2) such that, wherever both occur, p1 occurs first (or both hold
    initially), unless every such ordering is explained by p1 being a
    precondition of an action executed in between.
    """
    firsts = [first_occurrences(instance) for instance in corpus]
    pairs = set()
    for first_atom, second_atom in itertools.permutations(sorted(fluents, key=str), 2):
        common, explained, ordered = 0, 0, True
        for instance, first in zip(corpus, firsts):
            if first_atom not in first or second_atom not in first:
                continue
            common += 1
            start, end = first[first_atom], first[second_atom]
            if start == end == 0:
                continue
            if start >= end:
                ordered = False
                break
            if _precondition_chain(instance, precond, first_atom, start, end):
                explained += 1
        if ordered and common and explained < common:
            pairs.add((first_atom, second_atom))
    return frozenset(pairs)


def learn_mandatory(corpus: Corpus, goal: Props, fluents: Props) -> Props:
    occurring = [frozenset().union(*(state.props for state in instance.states)) for instance in corpus]
    everywhere = frozenset.intersection(*occurring) if occurring else frozenset()
    return (everywhere & fluents) - goal


def derive_contributed(instance: BehaviorInstance, precond: ActionModels) -> list[ContributedFact]:
    facts = []
    for before, action, _ in transitions(instance):
        for prop in sorted(before.props & precond.get(action, frozenset()), key=str):
            facts.append(ContributedFact(before.index, prop, action))
    return facts


def derive_achieved(
    instance: BehaviorInstance, goal: Props, precond: ActionModels, pos_effects: ActionModels
) -> list[AchievedFact]:
    """
    Atoms an action added that are goals, or that stay true until a later
    action uses them as a precondition.
    """
    facts = []
    for before, action, after in transitions(instance):
        added = after.props - before.props
        if action in pos_effects:
            added &= pos_effects[action]
        relevant = frozenset(
            prop for prop in added if prop in goal or _used_later(instance, precond, prop, after.index)
        )
        if relevant:
            facts.append(AchievedFact(before.index, action, relevant))
    return facts


def _used_later(instance: BehaviorInstance, precond: ActionModels, prop: Atom, created: int) -> bool:
    for index in range(created, instance.length):
        if prop not in instance.states[index]:
            return False
        if prop in precond.get(instance.actions[index], ()):
            return True
    return False
