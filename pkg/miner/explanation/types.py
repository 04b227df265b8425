from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from django.conf import settings
from django.db.models import IntegerChoices, TextChoices
from explanation.exceptions import PrincipleError
from traces.terms import Term, format_term
from traces.types import ActionTerm, Atom, Props


class PrincipleKind(TextChoices):
    DESIRED = "desired"
    UNDESIRED = "undesired"
    MANDATORY = "mandatory"
    MUST_PRECEDE = "must_precede"


PRINCIPLE_ARITY = {
    PrincipleKind.DESIRED: 1,
    PrincipleKind.UNDESIRED: 1,
    PrincipleKind.MANDATORY: 1,
    PrincipleKind.MUST_PRECEDE: 2,
}


class Degree(IntegerChoices):
    """Satisfaction degrees, better degrees compare greater."""

    PREVENTED = 0
    NOT_FULFILLED = 1
    INDIFFERENT_STATE = 2
    FULFILLED = 3


class IdealityPrinciple(NamedTuple):
    kind: PrincipleKind
    atoms: tuple[Atom, ...]

    def __str__(self):
        return format_term(self.term)

    @property
    def term(self) -> Term:
        return Term(str(self.kind), self.atoms)

    @classmethod
    def from_term(cls, term: Term) -> "IdealityPrinciple":
        """
        Raises:
            PrincipleError: if the term names no principle or has the wrong arguments
        """
        if term.functor not in PrincipleKind.values:
            raise PrincipleError(f"{format_term(term)} is not an ideality principle")
        kind = PrincipleKind(term.functor)
        if term.arity != PRINCIPLE_ARITY[kind] or not all(isinstance(arg, Term) for arg in term.args):
            raise PrincipleError(f"{format_term(term)}: {kind} takes {PRINCIPLE_ARITY[kind]} atom argument(s)")
        return cls(kind, term.args)

    @classmethod
    def desired(cls, atom: Atom) -> "IdealityPrinciple":
        return cls(PrincipleKind.DESIRED, (atom,))

    @classmethod
    def undesired(cls, atom: Atom) -> "IdealityPrinciple":
        return cls(PrincipleKind.UNDESIRED, (atom,))

    @classmethod
    def mandatory(cls, atom: Atom) -> "IdealityPrinciple":
        return cls(PrincipleKind.MANDATORY, (atom,))

    @classmethod
    def must_precede(cls, first: Atom, second: Atom) -> "IdealityPrinciple":
        return cls(PrincipleKind.MUST_PRECEDE, (first, second))


@dataclass(frozen=True)
class PrincipleOrder:
    """Importance of principles; principles without an explicit rank take their kind's rank."""

    ranks: dict[IdealityPrinciple, int] = field(default_factory=dict)

    def rank(self, principle: IdealityPrinciple) -> int:
        if principle in self.ranks:
            return self.ranks[principle]
        return settings.DEFAULT_PRINCIPLE_RANKS[str(principle.kind)]

    def at_most_as_important(self, first: IdealityPrinciple, second: IdealityPrinciple) -> bool:
        return self.rank(first) <= self.rank(second)

    def sort_key(self, principle: IdealityPrinciple):
        return self.rank(principle), str(principle)


class Tag(TextChoices):
    HOLDS = "holds"
    NOT_HOLDS = "not_holds"
    PRINCIPLE = "principle"
    INITIAL = "initial"
    NOT_INITIAL = "not_initial"
    PRECEDES = "precedes"
    NEVER_BEFORE = "never_before"
    NEVER_PREVENTED_UPTO = "never_prevented_upto"
    PREVENTED_AT = "prevented_at"
    PREVENTS = "prevents"
    NO_WITNESS = "no_witness"


# What each tagged proposition takes, in order
TAG_SIGNATURES = {
    Tag.HOLDS: ("atom", "state"),
    Tag.NOT_HOLDS: ("atom", "state"),
    Tag.PRINCIPLE: ("principle",),
    Tag.INITIAL: ("state",),
    Tag.NOT_INITIAL: ("state",),
    Tag.PRECEDES: ("state", "state"),
    Tag.NEVER_BEFORE: ("atom", "state"),
    Tag.NEVER_PREVENTED_UPTO: ("atom", "state"),
    Tag.PREVENTED_AT: ("atom", "state"),
    Tag.PREVENTS: ("atom", "atom"),
    Tag.NO_WITNESS: ("atom", "atom", "state"),
}

TagArg = Union[Atom, int, IdealityPrinciple]


def state_term(index: int) -> Term:
    return Term(f"s{index}")


class TaggedProposition(NamedTuple):
    tag: Tag
    args: tuple[TagArg, ...]

    def __str__(self):
        return format_term(self.term)

    @property
    def term(self) -> Term:
        args = []
        for kind, arg in zip(TAG_SIGNATURES[self.tag], self.args):
            if kind == "state":
                args.append(state_term(arg))
            elif kind == "principle":
                args.append(arg.term)
            else:
                args.append(arg)
        return Term(str(self.tag), tuple(args))

    @property
    def principle(self) -> Optional[IdealityPrinciple]:
        return self.args[0] if self.tag == Tag.PRINCIPLE else None


Certificate = tuple[TaggedProposition, ...]


class SatisfactionFact(NamedTuple):
    degree: Degree
    principle: IdealityPrinciple
    state: int
    certificate: Certificate


class SearchNode(NamedTuple):
    props: Props
    # principles whose history flag is set along the path
    flags: frozenset[IdealityPrinciple] = frozenset()
    depth: int = 0


class PlannedSequence(NamedTuple):
    length: int
    plan: tuple[ActionTerm, ...]


class Rational(NamedTuple):
    principle: IdealityPrinciple
    sequence: tuple[ActionTerm, ...]


class AlthoughFact(NamedTuple):
    before_cert: Certificate
    action: ActionTerm
    state: int
    deviation_cert: Certificate
    rational: Optional[Rational] = None

    @property
    def threatened(self) -> IdealityPrinciple:
        return next(tagged.principle for tagged in self.before_cert if tagged.tag == Tag.PRINCIPLE)

    @property
    def kind(self) -> str:
        return "although4" if self.rational is None else "although5"


class BackgroundFact(NamedTuple):
    used_background: frozenset
    conclusion: object


class Premise(TextChoices):
    ENTAILMENT_PREMISES = "psi_within_delta_and_omega", "the premises are not all background or observation"
    USES_BACKGROUND = "delta_meets_psi", "the derivation uses no background knowledge"
    NOVEL_OBSERVATION = "omega_beyond_delta", "no observation goes beyond the background knowledge"
