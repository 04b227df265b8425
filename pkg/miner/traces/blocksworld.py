"""
Blocks World behaviour generator.

A robot moves blocks between table places and other blocks until they are
stacked as a single tower, first block on top. Every initial configuration
yields one behaviour instance; injection scenarios then decorate the states
with extra atoms.
"""
import itertools
import logging
import random
from typing import Iterable, Iterator, NamedTuple, Optional

from django.conf import settings
from traces.exceptions import InvariantError
from traces.terms import Term, TermList, compound
from traces.types import (
    ActionTerm,
    Atom,
    BehaviorInstance,
    BlocksConfig,
    Corpus,
    InjectionKind,
    InjectionScenario,
    Props,
)

logger = logging.getLogger(__name__)

PREVENTING_P = Term("preventingp")
P = Term("p")


class ActionModel(NamedTuple):
    precond: Props
    pos_effects: Props
    neg_effects: Props


def on(block: str, support: str) -> Atom:
    return compound("on", block, support)


def clear(thing: str) -> Atom:
    return compound("clear", thing)


def move(block: str, source: str, destination: str) -> ActionTerm:
    return compound("move", block, source, destination)


class BlocksWorld:
    def __init__(self, blocks: Iterable[str] = None, places: Iterable[str] = None):
        self.blocks = tuple(blocks or settings.BLOCKS_WORLD_BLOCKS)
        self.places = tuple(places or settings.BLOCKS_WORLD_PLACES)
        self.supports = self.places + self.blocks

    @property
    def goal(self) -> Props:
        """The first block on the second, the second on the third and so on, with the top block clear."""
        tower = [on(upper, lower) for upper, lower in zip(self.blocks, self.blocks[1:])]
        return frozenset(tower + [clear(self.blocks[0])])

    def is_goal(self, props: Props) -> bool:
        return self.goal <= props

    def is_valid(self, config: BlocksConfig) -> bool:
        if set(config) != set(self.blocks):
            return False
        supports = list(config.values())
        if len(set(supports)) != len(supports):
            return False
        for block in self.blocks:
            seen = {block}
            support = config[block]
            while support in self.blocks:
                if support in seen:
                    return False
                seen.add(support)
                support = config[support]
            if support not in self.places:
                return False
        return True

    def enumerate_initial_configs(self) -> list[BlocksConfig]:
        """Every valid configuration, in the order of the cartesian product of supports."""
        candidates = (
            dict(zip(self.blocks, supports)) for supports in itertools.product(self.supports, repeat=len(self.blocks))
        )
        return [config for config in candidates if self.is_valid(config)]

    def config_to_state(self, config: BlocksConfig) -> Props:
        occupied = set(config.values())
        atoms = [on(block, support) for block, support in config.items()]
        atoms += [clear(thing) for thing in self.supports if thing not in occupied]
        return frozenset(atoms)

    def support_of(self, props: Props, block: str) -> Optional[str]:
        for support in self.supports:
            if on(block, support) in props:
                return support
        return None

    def legal_moves(self, props: Props) -> list[ActionTerm]:
        moves = []
        for block in self.blocks:
            source = self.support_of(props, block)
            if source is None or clear(block) not in props:
                continue
            for destination in self.supports:
                if destination not in (block, source) and clear(destination) in props:
                    moves.append(move(block, source, destination))
        return moves

    def is_legal(self, props: Props, action: ActionTerm) -> bool:
        return action in self.legal_moves(props)

    @staticmethod
    def apply_move(props: Props, action: ActionTerm) -> Props:
        block, source, destination = (arg.functor for arg in action.args)
        return (props - {on(block, source), clear(destination)}) | {on(block, destination), clear(source)}

    def action_models(self) -> dict[ActionTerm, ActionModel]:
        """Preconditions and effects of every ground move the physics allows somewhere."""
        models = {}
        for block in self.blocks:
            for source in self.supports:
                for destination in self.supports:
                    if len({block, source, destination}) < 3:
                        continue
                    models[move(block, source, destination)] = ActionModel(
                        frozenset({on(block, source), clear(block), clear(destination)}),
                        frozenset({on(block, destination), clear(source)}),
                        frozenset({on(block, source), clear(destination)}),
                    )
        return models

    def _well_placed(self, props: Props) -> set[str]:
        bottom = self.blocks[-1]
        well = set()
        if self.support_of(props, bottom) in self.places:
            well.add(bottom)
        for upper, lower in reversed(list(zip(self.blocks, self.blocks[1:]))):
            if lower in well and on(upper, lower) in props:
                well.add(upper)
        return well

    def solver_move(self, props: Props) -> ActionTerm:
        """
        Next move of the unstack-then-build policy: clear blocks standing on
        the wrong block go to the lowest free table place, then the tower is
        built bottom-up on the base position of the last block.
        """
        well = self._well_placed(props)
        for block in self.blocks:
            source = self.support_of(props, block)
            if source in self.blocks and block not in well and clear(block) in props:
                place = next(place for place in self.places if clear(place) in props)
                return move(block, source, place)
        for upper, lower in reversed(list(zip(self.blocks, self.blocks[1:]))):
            if upper not in well:
                return move(upper, self.support_of(props, upper), lower)
        raise InvariantError("the tower is already built")

    def replay(self, instance_id: str, initial: Props, actions: Iterable[ActionTerm], **kwargs) -> BehaviorInstance:
        states = [frozenset(initial)]
        for action in actions:
            if not self.is_legal(states[-1], action):
                raise InvariantError(f"instance {instance_id!r}: {action} is not legal in state {len(states) - 1}")
            states.append(self.apply_move(states[-1], action))
        return BehaviorInstance.from_props(instance_id, states, actions, **kwargs)

    def solve_instance(
        self, config: BlocksConfig, instance_id: str, rng: random.Random = None, exploration: int = None
    ) -> BehaviorInstance:
        """
        Record the robot solving `config`.

        The robot wanders with up to `exploration` uniformly random legal moves
        before running the solver; the trace ends at the first goal state,
        wherever it is reached.
        """
        if exploration is None:
            exploration = settings.BLOCKS_WORLD_EXPLORATION_STEPS
        rng = rng or random.Random(instance_id)
        props = self.config_to_state(config)
        states, actions = [props], []
        while not self.is_goal(props):
            if len(actions) < exploration:
                action = rng.choice(self.legal_moves(props))
            else:
                action = self.solver_move(props)
            props = self.apply_move(props, action)
            states.append(props)
            actions.append(action)
        return BehaviorInstance.from_props(instance_id, states, actions)

    def generate_instances(self, seed: int, exploration: int = None) -> Iterator[BehaviorInstance]:
        for index, config in enumerate(self.enumerate_initial_configs()):
            instance_id = f"bw{index:03d}"
            yield self.solve_instance(config, instance_id, random.Random(f"{seed}:{instance_id}"), exploration)

    def generate_corpus(self, scenario: InjectionScenario = InjectionScenario(), exploration: int = None) -> Corpus:
        instances = list(self.generate_instances(scenario.seed, exploration))
        rng = random.Random(f"{scenario.kind}-{scenario.seed}")
        if scenario.kind == InjectionKind.PREVENTION_A:
            instances = [inject_prevention(instance, rng, persistent=False) for instance in instances]
        elif scenario.kind == InjectionKind.PREVENTION_B:
            instances = [inject_prevention(instance, rng, persistent=True) for instance in instances]
        elif scenario.kind == InjectionKind.STACKED:
            instances = [self.inject_stacked(instance) for instance in instances]
        logger.info("Generated %d blocks world instances (%s, seed %d)", len(instances), scenario.kind, scenario.seed)
        return Corpus("bw", instances)

    def stacked_atom(self) -> Atom:
        return Term("stacked", (TermList(tuple(Term(block) for block in self.blocks)),))

    def inject_stacked(self, instance: BehaviorInstance) -> BehaviorInstance:
        states = [state.props for state in instance.states]
        states[-1] = states[-1] | {self.stacked_atom()}
        return instance.with_props(states)

    def figure2_instance(self) -> BehaviorInstance:
        """A robot whose first move puts the top block on the wrong block."""
        initial = frozenset(
            {on("c", "p4"), on("a", "c"), on("b", "p1"), clear("a"), clear("b"), clear("p2"), clear("p3")}
        )
        actions = [move("a", "c", "b"), move("a", "b", "p2"), move("b", "p1", "c"), move("a", "p2", "b")]
        return self.replay("figure2", initial, actions)


def inject_prevention(instance: BehaviorInstance, rng: random.Random, persistent: bool) -> BehaviorInstance:
    """
    Walk the states from the initial one, tossing a coin at each state between
    `p` and `preventingp`. Once `preventingp` shows up, `p` is never injected
    again; `preventingp` then stays in every later state when `persistent`.
    """
    states, prevented = [], False
    for state in instance.states:
        if prevented:
            states.append(state.props | {PREVENTING_P} if persistent else state.props)
        elif rng.random() < settings.INJECTION_COIN_BIAS:
            prevented = True
            states.append(state.props | {PREVENTING_P})
        else:
            states.append(state.props | {P})
    return instance.with_props(states)


def micro_domain_corpus(instances: int = None) -> Corpus:
    """
    Successful instances produce `g` while `free` holds; fragments `spoil`
    the domain, trading `free` for `q`, after which nothing restores `free`.
    """
    count = instances or settings.MICRO_DOMAIN_INSTANCES
    free, g, q = Term("free"), Term("g"), Term("q")
    successes = [
        BehaviorInstance.from_props(f"ok{index}", [{free}, {free, g}], [Term("makeg")]) for index in range(count)
    ]
    fragments = [
        BehaviorInstance.from_props(f"spoiled{index}", [{free}, {q}], [Term("spoil")], successful=False)
        for index in range(count)
    ]
    return Corpus("micro", successes + fragments)
