"""Knowledge bases shared by the test-suites of every app, learned once per run."""
from functools import lru_cache

from learning.pipeline import learn_knowledge_base
from learning.types import KnowledgeBase
from traces.blocksworld import BlocksWorld
from traces.terms import Term
from traces.tests.helpers import blocksworld_corpus, micro_corpus
from traces.types import InjectionKind


@lru_cache(maxsize=None)
def blocksworld_kb(kind: InjectionKind = InjectionKind.NONE, seed: int = 0) -> KnowledgeBase:
    return learn_knowledge_base(blocksworld_corpus(kind, seed))


@lru_cache(maxsize=None)
def micro_kb() -> KnowledgeBase:
    return learn_knowledge_base(micro_corpus(), goal=[Term("g")])


def physics_kb(world: BlocksWorld) -> KnowledgeBase:
    """The exact action models of `world`, every atom of every configuration being a fluent."""
    models = world.action_models()
    fluents = frozenset().union(*(world.config_to_state(config) for config in world.enumerate_initial_configs()))
    return KnowledgeBase(
        fluents=fluents,
        actions=frozenset(models),
        precond={action: model.precond for action, model in models.items()},
        pos_effects={action: model.pos_effects for action, model in models.items()},
        neg_effects={action: model.neg_effects for action, model in models.items()},
        goal=world.goal,
        desired_props=world.goal,
    )
