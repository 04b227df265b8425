from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from django.db.models import TextChoices
from traces.exceptions import InvariantError
from traces.terms import Term

Atom = Term
ActionTerm = Term
InstanceId = str
Props = frozenset[Atom]

# block -> the place or block it stands on
BlocksConfig = dict[str, str]


class InjectionKind(TextChoices):
    NONE = "none"
    PREVENTION_A = "prevention_a"
    PREVENTION_B = "prevention_b"
    STACKED = "stacked"


class InjectionScenario(NamedTuple):
    kind: InjectionKind = InjectionKind.NONE
    seed: int = 0


@dataclass(frozen=True)
class State:
    index: int
    props: Props = frozenset()

    def __post_init__(self):
        if self.index < 0:
            raise InvariantError(f"state index {self.index} is negative")
        object.__setattr__(self, "props", frozenset(self.props))

    def __contains__(self, atom: Atom) -> bool:
        return atom in self.props

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.props)


class Transition(NamedTuple):
    before: State
    action: ActionTerm
    after: State


@dataclass(frozen=True)
class BehaviorInstance:
    """
    A recorded trace: states[i] --actions[i]--> states[i + 1].

    Instances with `successful` unset are fragments that never reached the
    goal; they take part in every relation except goal learning.
    """

    id: InstanceId
    states: tuple[State, ...]
    actions: tuple[ActionTerm, ...] = ()
    successful: bool = True

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "actions", tuple(self.actions))
        if not self.states:
            raise InvariantError(f"instance {self.id!r}: has no states")
        if len(self.actions) != len(self.states) - 1:
            raise InvariantError(
                f"instance {self.id!r}: {len(self.actions)} actions for {len(self.states)} states, "
                f"expected {len(self.states) - 1}"
            )
        for position, state in enumerate(self.states):
            if state.index != position:
                raise InvariantError(f"instance {self.id!r}: state {position} is indexed {state.index}")

    @classmethod
    def from_props(
        cls, id: InstanceId, states: Iterable[Iterable[Atom]], actions: Iterable[ActionTerm] = (), successful=True
    ) -> "BehaviorInstance":
        return cls(id, tuple(State(index, frozenset(props)) for index, props in enumerate(states)), actions, successful)

    @property
    def length(self) -> int:
        return len(self.actions)

    @property
    def initial_state(self) -> State:
        return self.states[0]

    @property
    def final_state(self) -> State:
        return self.states[-1]

    def with_props(self, states: Iterable[Iterable[Atom]]) -> "BehaviorInstance":
        return BehaviorInstance.from_props(self.id, states, self.actions, self.successful)


@dataclass(frozen=True)
class Corpus:
    class_id: str
    instances: tuple[BehaviorInstance, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "instances", tuple(self.instances))
        seen = set()
        for instance in self.instances:
            if instance.id in seen:
                raise InvariantError(f"duplicate instance id {instance.id!r}")
            seen.add(instance.id)

    def __iter__(self) -> Iterator[BehaviorInstance]:
        return iter(self.instances)

    def __len__(self) -> int:
        return len(self.instances)

    def get_instance(self, instance_id: InstanceId) -> BehaviorInstance:
        for instance in self.instances:
            if instance.id == instance_id:
                return instance
        raise KeyError(instance_id)

    def states(self) -> Iterator[State]:
        for instance in self.instances:
            yield from instance.states

    @property
    def max_length(self) -> int:
        return max((instance.length for instance in self.instances), default=0)
