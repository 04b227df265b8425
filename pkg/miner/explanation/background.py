import logging
from typing import Hashable, Iterable

from explanation.exceptions import BackgroundPremiseError
from explanation.types import BackgroundFact, Premise

logger = logging.getLogger(__name__)


def derive_background(
    delta: Iterable[Hashable], omega: Iterable[Hashable], psi: Iterable[Hashable], q: Hashable
) -> BackgroundFact:
    """
    Record which background knowledge was used to reach a conclusion.

    `psi` are the premises of a derivation of `q`, which the caller attests;
    `delta` is background knowledge and `omega` the observations. Entries
    are opaque. Novelty of the observations is checked against `delta`
    itself rather than its deductive closure.

    Raises:
        BackgroundPremiseError: naming the first premise of the rule that fails
    """
    delta, omega, psi = frozenset(delta), frozenset(omega), frozenset(psi)
    if not psi <= delta | omega:
        raise BackgroundPremiseError(Premise.ENTAILMENT_PREMISES)
    used = delta & psi
    if not used:
        raise BackgroundPremiseError(Premise.USES_BACKGROUND)
    if not omega - delta:
        raise BackgroundPremiseError(Premise.NOVEL_OBSERVATION)
    logger.debug("%s derived with %d background premises", q, len(used))
    return BackgroundFact(used, q)
