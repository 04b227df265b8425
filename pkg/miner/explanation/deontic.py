"""
Satisfaction of ideality principles.

`assess` gives every (principle, state) of an instance a degree, and a
certificate: the tagged propositions that justify it. Every certificate
starts with the principle itself and can be re-checked with `check_tagged`.
"""
from typing import Iterable, Optional

from explanation.exceptions import PrincipleError
from explanation.types import (
    Certificate,
    Degree,
    IdealityPrinciple,
    PrincipleKind,
    SatisfactionFact,
    Tag,
    TaggedProposition,
)
from learning.types import KnowledgeBase
from traces.types import Atom, BehaviorInstance, Props


def tagged(tag: Tag, *args) -> TaggedProposition:
    return TaggedProposition(tag, args)


def check_principle(principle: IdealityPrinciple, kb: KnowledgeBase):
    """
    Raises:
        PrincipleError: if one of the principle's atoms is not a fluent
    """
    for atom in principle.atoms:
        if atom not in kb.fluents:
            raise PrincipleError(f"{principle}: {atom} is not a fluent proposition")


def prevented_prop(atom: Atom, instance: BehaviorInstance, index: int, kb: KnowledgeBase) -> Optional[Atom]:
    """A proposition of state `index` that prevents `atom`, if any."""
    for candidate in sorted(instance.states[index].props, key=str):
        if (candidate, atom) in kb.prevents:
            return candidate
    return None


def first_prevention(atom: Atom, instance: BehaviorInstance, index: int, kb: KnowledgeBase):
    """(state, preventer) of the earliest prevention of `atom` up to state `index`."""
    if not kb.prevents:
        return None
    for state in range(index + 1):
        preventer = prevented_prop(atom, instance, state, kb)
        if preventer is not None:
            return state, preventer
    return None


def both_initial(principle: IdealityPrinciple, instance: BehaviorInstance) -> bool:
    return principle.kind == PrincipleKind.MUST_PRECEDE and set(principle.atoms) <= instance.initial_state.props


def history_flag(principle: IdealityPrinciple, props: Props) -> bool:
    """
    Whether a visited state sets the principle's history flag: a state with
    the first atom but not the second for MustPrecede, any state with the
    atom for Undesired.
    """
    if principle.kind == PrincipleKind.MUST_PRECEDE:
        first, second = principle.atoms
        return first in props and second not in props
    if principle.kind == PrincipleKind.UNDESIRED:
        return principle.atoms[0] in props
    return False


def history_flags(principles: Iterable[IdealityPrinciple], instance: BehaviorInstance, index: int):
    """Flags set by the states of `instance` up to `index`."""
    flags = set()
    for principle in principles:
        if both_initial(principle, instance):
            flags.add(principle)
        elif any(history_flag(principle, state.props) for state in instance.states[: index + 1]):
            flags.add(principle)
    return frozenset(flags)


def fulfilled_in(principle: IdealityPrinciple, props: Props, flags: frozenset) -> bool:
    if principle.kind == PrincipleKind.MUST_PRECEDE:
        return principle.atoms[1] in props and principle in flags
    if principle.kind == PrincipleKind.UNDESIRED:
        return principle.atoms[0] not in props and principle not in flags
    return principle.atoms[0] in props


def _fact(degree: Degree, principle: IdealityPrinciple, index: int, *certificate: TaggedProposition):
    return SatisfactionFact(degree, principle, index, (tagged(Tag.PRINCIPLE, principle),) + certificate)


def _assess_presence(principle, instance, index, kb) -> SatisfactionFact:
    (atom,) = principle.atoms
    if atom in instance.states[index]:
        return _fact(Degree.FULFILLED, principle, index, tagged(Tag.HOLDS, atom, index))
    prevention = first_prevention(atom, instance, index, kb)
    if prevention is not None:
        state, preventer = prevention
        return _fact(
            Degree.PREVENTED,
            principle,
            index,
            tagged(Tag.PREVENTS, preventer, atom),
            tagged(Tag.HOLDS, preventer, state),
            tagged(Tag.NOT_HOLDS, atom, index),
        )
    return _fact(
        Degree.NOT_FULFILLED,
        principle,
        index,
        tagged(Tag.NOT_HOLDS, atom, index),
        tagged(Tag.NEVER_PREVENTED_UPTO, atom, index),
    )


def _assess_undesired(principle, instance, index, kb) -> SatisfactionFact:
    (atom,) = principle.atoms
    occurrence = next((state.index for state in instance.states[: index + 1] if atom in state), None)
    if occurrence is None:
        return _fact(
            Degree.FULFILLED,
            principle,
            index,
            tagged(Tag.NOT_HOLDS, atom, index),
            tagged(Tag.NEVER_BEFORE, atom, index),
        )
    return _fact(Degree.NOT_FULFILLED, principle, index, tagged(Tag.HOLDS, atom, occurrence))


def _assess_must_precede(principle, instance, index, kb) -> SatisfactionFact:
    first, second = principle.atoms
    states = instance.states
    if both_initial(principle, instance):
        return _fact(
            Degree.FULFILLED,
            principle,
            index,
            tagged(Tag.INITIAL, 0),
            tagged(Tag.HOLDS, first, 0),
            tagged(Tag.HOLDS, second, 0),
        )

    if second not in states[index]:
        if index > 0:
            return _fact(
                Degree.INDIFFERENT_STATE,
                principle,
                index,
                tagged(Tag.NOT_INITIAL, index),
                tagged(Tag.NOT_HOLDS, second, index),
            )
        if first in states[index]:
            return _fact(
                Degree.NOT_FULFILLED,
                principle,
                index,
                tagged(Tag.INITIAL, index),
                tagged(Tag.HOLDS, first, index),
                tagged(Tag.NOT_HOLDS, second, index),
            )
        return _fact(
            Degree.INDIFFERENT_STATE,
            principle,
            index,
            tagged(Tag.INITIAL, index),
            tagged(Tag.NOT_HOLDS, first, index),
            tagged(Tag.NOT_HOLDS, second, index),
        )

    witness = next(
        (t for t in range(index - 1, -1, -1) if first in states[t] and second not in states[t]),
        None,
    )
    if witness is not None:
        return _fact(
            Degree.FULFILLED,
            principle,
            index,
            tagged(Tag.HOLDS, second, index),
            tagged(Tag.HOLDS, first, witness),
            tagged(Tag.NOT_HOLDS, second, witness),
            tagged(Tag.PRECEDES, witness, index),
        )

    prevention = first_prevention(first, instance, index, kb)
    if prevention is not None:
        state, preventer = prevention
        return _fact(
            Degree.PREVENTED,
            principle,
            index,
            tagged(Tag.HOLDS, second, index),
            tagged(Tag.PREVENTED_AT, first, state),
            tagged(Tag.PREVENTS, preventer, first),
            tagged(Tag.HOLDS, preventer, state),
        )

    marker = tagged(Tag.NOT_INITIAL, index) if index > 0 else tagged(Tag.INITIAL, index)
    if not any(first in states[t] for t in range(index)):
        return _fact(
            Degree.NOT_FULFILLED,
            principle,
            index,
            marker,
            tagged(Tag.HOLDS, second, index),
            tagged(Tag.NEVER_BEFORE, first, index),
            tagged(Tag.NEVER_PREVENTED_UPTO, first, index),
        )
    # the first atom only ever held together with the second one
    return _fact(
        Degree.NOT_FULFILLED,
        principle,
        index,
        marker,
        tagged(Tag.HOLDS, second, index),
        tagged(Tag.NO_WITNESS, first, second, index),
        tagged(Tag.NEVER_PREVENTED_UPTO, first, index),
    )


ASSESSORS = {
    PrincipleKind.DESIRED: _assess_presence,
    PrincipleKind.MANDATORY: _assess_presence,
    PrincipleKind.UNDESIRED: _assess_undesired,
    PrincipleKind.MUST_PRECEDE: _assess_must_precede,
}


def assess(principle: IdealityPrinciple, instance: BehaviorInstance, index: int, kb: KnowledgeBase) -> SatisfactionFact:
    """
    Degree and certificate of `principle` at state `index` of `instance`.

    Raises:
        PrincipleError: if an atom of the principle is not a fluent of `kb`
    """
    check_principle(principle, kb)
    return ASSESSORS[principle.kind](principle, instance, index, kb)


def not_violated(
    principle: IdealityPrinciple, instance: BehaviorInstance, index: int, kb: KnowledgeBase
) -> Optional[SatisfactionFact]:
    fact = assess(principle, instance, index, kb)
    return None if fact.degree == Degree.PREVENTED else fact


def _valid_state(instance: BehaviorInstance, index) -> bool:
    return isinstance(index, int) and 0 <= index < len(instance.states)


def check_tagged(proposition: TaggedProposition, instance: BehaviorInstance, kb: KnowledgeBase) -> bool:
    """Evaluate a tagged proposition against the instance and the knowledge base."""
    tag, args = proposition
    states = instance.states

    if tag == Tag.PRINCIPLE:
        return all(atom in kb.fluents for atom in args[0].atoms)
    if tag == Tag.PREVENTS:
        return tuple(args) in kb.prevents
    if tag == Tag.PRECEDES:
        return _valid_state(instance, args[0]) and _valid_state(instance, args[1]) and args[0] < args[1]

    index = args[-1]
    if not _valid_state(instance, index):
        return False
    if tag == Tag.INITIAL:
        return index == 0
    if tag == Tag.NOT_INITIAL:
        return index > 0
    if tag == Tag.HOLDS:
        return args[0] in states[index]
    if tag == Tag.NOT_HOLDS:
        return args[0] not in states[index]
    if tag == Tag.NEVER_BEFORE:
        return all(args[0] not in state for state in states[:index])
    if tag == Tag.NEVER_PREVENTED_UPTO:
        return first_prevention(args[0], instance, index, kb) is None
    if tag == Tag.PREVENTED_AT:
        return prevented_prop(args[0], instance, index, kb) is not None
    if tag == Tag.NO_WITNESS:
        first, second = args[0], args[1]
        return not any(first in state and second not in state for state in states[:index])
    return False


def abridge(certificate: Certificate, kb: KnowledgeBase) -> Certificate:
    """
    Presentation form of a certificate: initial-state markers are dropped,
    and so are the no-prevention conjuncts when nothing prevents anything.
    """
    hidden = {Tag.INITIAL, Tag.NOT_INITIAL}
    if not kb.prevents:
        hidden.add(Tag.NEVER_PREVENTED_UPTO)
    return tuple(proposition for proposition in certificate if proposition.tag not in hidden)
