"""Corpora shared by the test-suites of every app, generated once per run."""
from functools import lru_cache

from traces.blocksworld import BlocksWorld, micro_domain_corpus
from traces.types import Corpus, InjectionKind, InjectionScenario


@lru_cache(maxsize=None)
def blocksworld_corpus(kind: InjectionKind = InjectionKind.NONE, seed: int = 0) -> Corpus:
    return BlocksWorld().generate_corpus(InjectionScenario(kind, seed))


@lru_cache(maxsize=None)
def micro_corpus() -> Corpus:
    return micro_domain_corpus(5)


def figure2_corpus() -> Corpus:
    return Corpus("bw", [BlocksWorld().figure2_instance()])
