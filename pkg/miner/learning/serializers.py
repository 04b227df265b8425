from rest_framework import serializers
from traces.exceptions import TermSyntaxError
from traces.serializers import TermField, TermSetField
from traces.terms import format_term, parse_term, sort_terms

from .types import KnowledgeBase


class TermPairField(serializers.ListField):
    """A pair of terms; unordered pairs are written sorted."""

    child = TermField()

    def __init__(self, *args, unordered=False, **kwargs):
        kwargs.setdefault("min_length", 2)
        kwargs.setdefault("max_length", 2)
        super().__init__(*args, **kwargs)
        self.unordered = unordered

    def to_internal_value(self, data):
        pair = tuple(super().to_internal_value(data))
        if self.unordered:
            if pair[0] == pair[1]:
                raise serializers.ValidationError("A term cannot be paired with itself.")
            return frozenset(pair)
        return pair

    def to_representation(self, data):
        pair = sort_terms(data) if self.unordered else data
        return [format_term(term) for term in pair]


class TermPairSetField(serializers.ListField):
    def __init__(self, *args, unordered=False, **kwargs):
        kwargs["child"] = TermPairField(unordered=unordered)
        super().__init__(*args, **kwargs)

    def to_internal_value(self, data):
        return frozenset(super().to_internal_value(data))

    def to_representation(self, data):
        return sorted(super().to_representation(data))


class TermMapField(serializers.DictField):
    """Term -> set of terms, keyed by canonical text in sorted order."""

    child = TermSetField()
    default_error_messages = {"key": "Invalid key {term!r}: {reason}."}

    def to_internal_value(self, data):
        mapping = super().to_internal_value(data)
        parsed = {}
        for key, value in mapping.items():
            try:
                parsed[parse_term(key)] = value
            except TermSyntaxError as error:
                self.fail("key", term=key, reason=error.reason)
        return parsed

    def to_representation(self, value):
        return {format_term(key): self.child.to_representation(value[key]) for key in sort_terms(value)}


class KnowledgeBaseSerializer(serializers.Serializer):  # noqa
    """Fields are declared in alphabetical order so that keys come out sorted."""

    actions = TermSetField()
    defining = TermMapField()
    desired_actions = TermSetField()
    desired_props = TermSetField()
    fluents = TermSetField()
    goal = TermSetField()
    incompatible = TermPairSetField(unordered=True)
    incompatible_prop_action = TermPairSetField()
    mandatory = TermSetField()
    mandatory_verified = serializers.BooleanField(default=False)
    must_precede = TermPairSetField()
    neg_effects = TermMapField()
    neutral_actions = TermSetField()
    neutral_props = TermSetField()
    pos_effects = TermMapField()
    precond = TermMapField()
    prevents = TermPairSetField()
    statics = TermSetField()
    undesired_actions = TermSetField()
    undesired_props = TermSetField()

    def validate(self, data):
        if data["statics"] & data["fluents"]:
            raise serializers.ValidationError("statics and fluents overlap")
        for section in ("precond", "pos_effects", "neg_effects"):
            unknown = data[section].keys() - data["actions"]
            if unknown:
                raise serializers.ValidationError(
                    f"{section} describes unknown actions: {', '.join(map(format_term, sort_terms(unknown)))}"
                )
        return data

    def create(self, validated_data):
        return KnowledgeBase(**validated_data)
