"""
Bounded breadth-first forward search over learned action models.

Only observed ground actions are planned with. Actions are expanded in
canonical text order, so among shortest plans the lexicographically first
one is returned.
"""
from collections import deque
from typing import Callable, Iterable, Optional

from explanation.deontic import assess, fulfilled_in, history_flag, history_flags
from explanation.types import Degree, IdealityPrinciple, PlannedSequence, SearchNode
from learning.types import KnowledgeBase
from traces.terms import sort_terms
from traces.types import ActionTerm, Atom, BehaviorInstance, Props

Plan = list[ActionTerm]


class Planner:
    def __init__(self, kb: KnowledgeBase):
        self.kb = kb
        self.actions = sort_terms(kb.actions)
        self._expansions: dict[Props, tuple[tuple[ActionTerm, Props], ...]] = {}
        self._reachable: dict[tuple[Props, int], dict[Atom, int]] = {}

    def expand(self, props: Props) -> tuple[tuple[ActionTerm, Props], ...]:
        """(action, successor props) for every action whose preconditions hold in `props`."""
        if props not in self._expansions:
            kb = self.kb
            self._expansions[props] = tuple(
                (action, (props - kb.neg_effects.get(action, frozenset())) | kb.pos_effects.get(action, frozenset()))
                for action in self.actions
                if kb.precond.get(action, frozenset()) <= props
            )
        return self._expansions[props]

    def successors(
        self, node: SearchNode, principles: Iterable[IdealityPrinciple] = ()
    ) -> list[tuple[ActionTerm, SearchNode]]:
        principles = tuple(principles)
        children = []
        for action, props in self.expand(node.props):
            flags = node.flags | {principle for principle in principles if history_flag(principle, props)}
            children.append((action, SearchNode(props, flags, node.depth + 1)))
        return children

    def search(
        self,
        start: SearchNode,
        bound: int,
        is_goal: Callable[[SearchNode], bool],
        principles: Iterable[IdealityPrinciple] = (),
    ) -> Optional[Plan]:
        """Shortest plan of at most `bound` actions from `start` to a goal node."""
        if is_goal(start):
            return []
        principles = tuple(principles)
        seen = {(start.props, start.flags)}
        queue = deque([(start, [])])
        while queue:
            node, plan = queue.popleft()
            if node.depth >= bound:
                continue
            for action, child in self.successors(node, principles):
                key = (child.props, child.flags)
                if key in seen:
                    continue
                if is_goal(child):
                    return plan + [action]
                seen.add(key)
                queue.append((child, plan + [action]))
        return None

    def bounded_reach(self, start: Props, target: Atom, bound: int, reoccur: bool = False) -> Optional[Plan]:
        """
        Shortest plan reaching a state with `target`. With `reoccur`, the
        target must first be absent from some state on the way.
        """
        start = frozenset(start)
        if not reoccur:
            return self.search(SearchNode(start), bound, lambda node: target in node.props)

        # search over (state, target seen absent) pairs
        origin = (start, target not in start)
        seen = {origin}
        queue = deque([(origin, [])])
        while queue:
            (props, gone), plan = queue.popleft()
            if len(plan) >= bound:
                continue
            for action, child in self.expand(props):
                if gone and target in child:
                    return plan + [action]
                key = (child, gone or target not in child)
                if key not in seen:
                    seen.add(key)
                    queue.append((key, plan + [action]))
        return None

    def reachable_atoms(self, start: Props, bound: int) -> dict[Atom, int]:
        """Every atom of a state reachable within `bound` actions, with its distance."""
        start = frozenset(start)
        key = (start, bound)
        if key not in self._reachable:
            distances = {atom: 0 for atom in start}
            seen = {start}
            frontier = [start]
            for depth in range(1, bound + 1):
                next_frontier = []
                for props in frontier:
                    for _, child in self.expand(props):
                        if child in seen:
                            continue
                        seen.add(child)
                        next_frontier.append(child)
                        for atom in child:
                            distances.setdefault(atom, depth)
                if not next_frontier:
                    break
                frontier = next_frontier
            self._reachable[key] = distances
        return self._reachable[key]

    def optimum_sequence(
        self, principle: IdealityPrinciple, instance: BehaviorInstance, index: int
    ) -> Optional[PlannedSequence]:
        """
        Shortest plan from state `index` to a state fulfilling `principle`,
        no longer than the rest of the instance. History flags start from
        what the instance actually went through.
        """
        if assess(principle, instance, index, self.kb).degree == Degree.FULFILLED:
            return PlannedSequence(0, ())
        start = SearchNode(instance.states[index].props, history_flags([principle], instance, index))
        plan = self.search(
            start,
            instance.length - index,
            lambda node: fulfilled_in(principle, node.props, node.flags),
            [principle],
        )
        return None if plan is None else PlannedSequence(len(plan), tuple(plan))


def successors(node: SearchNode, kb: KnowledgeBase, principles: Iterable[IdealityPrinciple] = ()):
    return Planner(kb).successors(node, principles)


def bounded_reach(start: Props, target: Atom, kb: KnowledgeBase, bound: int) -> Optional[Plan]:
    return Planner(kb).bounded_reach(start, target, bound)


def optimum_sequence(
    principle: IdealityPrinciple, instance: BehaviorInstance, index: int, kb: KnowledgeBase
) -> Optional[PlannedSequence]:
    return Planner(kb).optimum_sequence(principle, instance, index)


def observed_sequence(
    principle: IdealityPrinciple, instance: BehaviorInstance, index: int, kb: KnowledgeBase
) -> Optional[list[ActionTerm]]:
    """Actions executed from state `index` until the principle is first fulfilled afterwards."""
    for later in range(index + 1, len(instance.states)):
        if assess(principle, instance, later, kb).degree == Degree.FULFILLED:
            return list(instance.actions[index:later])
    return None
