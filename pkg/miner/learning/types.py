from dataclasses import dataclass, field
from typing import NamedTuple

from traces.terms import Term
from traces.types import ActionTerm, Atom, Props

Entity = Term
EntityPair = tuple[Entity, Entity]
AtomPair = tuple[Atom, Atom]
# unordered pair of atoms
AtomCouple = frozenset[Atom]
ActionModels = dict[ActionTerm, Props]


class AchievedFact(NamedTuple):
    state: int
    action: ActionTerm
    props: Props


class ContributedFact(NamedTuple):
    state: int
    prop: Atom
    action: ActionTerm


class DefiningFact(NamedTuple):
    defined: Atom
    body: Props


@dataclass
class KnowledgeBase:
    """
    Every relation learned from a corpus.

    Atoms and actions are both terms; an entity of `prevents` is an action
    exactly when it belongs to `actions`.
    """

    statics: Props = frozenset()
    fluents: Props = frozenset()
    actions: frozenset[ActionTerm] = frozenset()
    precond: ActionModels = field(default_factory=dict)
    pos_effects: ActionModels = field(default_factory=dict)
    neg_effects: ActionModels = field(default_factory=dict)
    goal: Props = frozenset()
    desired_props: Props = frozenset()
    desired_actions: frozenset[ActionTerm] = frozenset()
    undesired_props: Props = frozenset()
    undesired_actions: frozenset[ActionTerm] = frozenset()
    neutral_props: Props = frozenset()
    neutral_actions: frozenset[ActionTerm] = frozenset()
    incompatible: frozenset[AtomCouple] = frozenset()
    incompatible_prop_action: frozenset[tuple[Atom, ActionTerm]] = frozenset()
    prevents: frozenset[EntityPair] = frozenset()
    must_precede: frozenset[AtomPair] = frozenset()
    mandatory: Props = frozenset()
    # occurrence in every instance is checked, necessity for the goal is not
    mandatory_verified: bool = False
    defining: dict[Atom, Props] = field(default_factory=dict)

    @property
    def observed_atoms(self) -> Props:
        return self.statics | self.fluents

    @property
    def desired_entities(self) -> frozenset[Entity]:
        return self.desired_props | self.desired_actions

    def is_action(self, entity: Entity) -> bool:
        return entity in self.actions

    def are_incompatible(self, first: Atom, second: Atom) -> bool:
        return frozenset((first, second)) in self.incompatible

    @property
    def prevents_props(self) -> frozenset[AtomPair]:
        return frozenset(
            (first, second) for first, second in self.prevents if not (self.is_action(first) or self.is_action(second))
        )
