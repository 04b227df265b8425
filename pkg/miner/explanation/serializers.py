import re

from rest_framework import serializers
from traces.serializers import TermField
from traces.terms import Term, TermList, format_term

from .exceptions import PrincipleError
from .types import TAG_SIGNATURES, AlthoughFact, IdealityPrinciple, PrincipleOrder, Rational, Tag, TaggedProposition

STATE = re.compile(r"s(0|[1-9][0-9]*)")


def parse_state(term) -> int:
    """Index of a state constant such as `s3`; raises ValueError otherwise."""
    match = STATE.fullmatch(term.functor) if isinstance(term, Term) and not term.args else None
    if match is None:
        raise ValueError(f"{format_term(term)} is not a state")
    return int(match.group(1))


class StateField(serializers.CharField):
    default_error_messages = {"state": "Expected a state such as s0 but got {value!r}."}

    def to_internal_value(self, data):
        value = super().to_internal_value(data)
        try:
            return parse_state(Term(value))
        except ValueError:
            self.fail("state", value=value)

    def to_representation(self, value):
        return f"s{value}"


class PrincipleField(TermField):
    default_error_messages = {"principle": "{reason}."}

    def to_internal_value(self, data):
        try:
            return IdealityPrinciple.from_term(super().to_internal_value(data))
        except PrincipleError as error:
            self.fail("principle", reason=error)

    def to_representation(self, value):
        return str(value)


class TaggedPropositionField(TermField):
    default_error_messages = {
        "tag": "Unknown tagged proposition {functor!r}.",
        "signature": "{tag} takes ({signature}).",
        "argument": "{tag}: {reason}.",
    }

    def to_internal_value(self, data):
        term = super().to_internal_value(data)
        if term.functor not in Tag.values:
            self.fail("tag", functor=term.functor)
        tag = Tag(term.functor)
        signature = TAG_SIGNATURES[tag]
        if term.arity != len(signature):
            self.fail("signature", tag=tag, signature=", ".join(signature))

        args = []
        for kind, arg in zip(signature, term.args):
            try:
                if kind == "state":
                    args.append(parse_state(arg))
                elif kind == "principle":
                    args.append(IdealityPrinciple.from_term(arg))
                elif isinstance(arg, TermList):
                    raise ValueError(f"{format_term(arg)} is not an atom")
                else:
                    args.append(arg)
            except (ValueError, PrincipleError) as error:
                self.fail("argument", tag=tag, reason=error)
        return TaggedProposition(tag, tuple(args))

    def to_representation(self, value):
        return str(value)


class CertificateField(serializers.ListField):
    """Tagged propositions in certificate order, the principle first."""

    child = TaggedPropositionField()

    def to_internal_value(self, data):
        return tuple(super().to_internal_value(data))


class RationalSerializer(serializers.Serializer):  # noqa
    principle = PrincipleField()
    sequence = serializers.ListField(child=TermField(), allow_empty=False)


class AlthoughFactSerializer(serializers.Serializer):  # noqa
    kind = serializers.ChoiceField(choices=["although4", "although5"])
    pset1 = CertificateField(source="before_cert", allow_empty=False)
    action = TermField()
    state = StateField()
    dev = CertificateField(source="deviation_cert", allow_empty=False)
    rational = RationalSerializer(required=False)

    def validate(self, data):
        principles = []
        for key in ("before_cert", "deviation_cert"):
            found = [tagged.principle for tagged in data[key] if tagged.tag == Tag.PRINCIPLE]
            if len(found) != 1:
                raise serializers.ValidationError(f"{key} needs exactly one principle, found {len(found)}")
            principles.extend(found)
        if principles[0] != principles[1]:
            raise serializers.ValidationError("pset1 and dev threaten different principles")

        rational = data.get("rational")
        if (data["kind"] == "although5") != (rational is not None):
            raise serializers.ValidationError("only although5 facts carry a rational")
        if rational is not None and rational["sequence"][0] != data["action"]:
            raise serializers.ValidationError("the rational sequence must start with the action")
        if data["state"] == 0:
            raise serializers.ValidationError("s0 cannot result from an action")
        return data

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if data["rational"] is None:
            del data["rational"]
        return data

    def create(self, validated_data):
        rational = validated_data.get("rational")
        return AlthoughFact(
            validated_data["before_cert"],
            validated_data["action"],
            validated_data["state"],
            validated_data["deviation_cert"],
            None if rational is None else Rational(rational["principle"], tuple(rational["sequence"])),
        )


class PrinciplesConfigSerializer(serializers.Serializer):  # noqa
    principles = serializers.ListField(child=PrincipleField())
    ranks = serializers.DictField(child=serializers.IntegerField(), required=False, default=dict)

    def validate(self, data):
        listed = {str(principle): principle for principle in data["principles"]}
        if len(listed) != len(data["principles"]):
            raise serializers.ValidationError("principles are listed more than once")
        unknown = sorted(set(data["ranks"]) - set(listed))
        if unknown:
            raise serializers.ValidationError(f"ranked principles are not listed: {', '.join(unknown)}")
        data["ranks"] = {listed[text]: rank for text, rank in data["ranks"].items()}
        return data

    def create(self, validated_data):
        return validated_data["principles"], PrincipleOrder(validated_data["ranks"])
