from rest_framework import serializers

from .exceptions import TermSyntaxError
from .terms import format_term, parse_term, sort_terms
from .types import BehaviorInstance, Corpus


class TermField(serializers.Field):
    default_error_messages = {
        "type": "Expected a term string but got {input_type}.",
        "syntax": "{reason} at offset {offset} in {term!r}.",
    }

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail("type", input_type=type(data).__name__)
        try:
            return parse_term(data)
        except TermSyntaxError as error:
            self.fail("syntax", reason=error.reason, offset=error.offset, term=error.term)

    def to_representation(self, value):
        return format_term(value)


class TermSetField(serializers.ListField):
    """A set of terms, written as an array sorted by canonical text."""

    child = TermField()
    default_error_messages = {"duplicate": "Duplicate term {term}."}

    def to_internal_value(self, data):
        terms = super().to_internal_value(data)
        seen = set()
        for term in terms:
            if term in seen:
                self.fail("duplicate", term=format_term(term))
            seen.add(term)
        return frozenset(terms)

    def to_representation(self, data):
        return [format_term(term) for term in sort_terms(data)]


class BehaviorInstanceSerializer(serializers.Serializer):  # noqa
    id = serializers.CharField(trim_whitespace=False)
    states = serializers.ListField(child=TermSetField(), allow_empty=False)
    actions = serializers.ListField(child=TermField())
    successful = serializers.BooleanField(default=True)

    def validate(self, data):
        if len(data["actions"]) != len(data["states"]) - 1:
            raise serializers.ValidationError(
                f"instance {data['id']!r}: {len(data['actions'])} actions for {len(data['states'])} states, "
                f"expected {len(data['states']) - 1}"
            )
        return data

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if data["successful"]:
            del data["successful"]
        return data

    def create(self, validated_data):
        return BehaviorInstance.from_props(**validated_data)


class CorpusSerializer(serializers.Serializer):  # noqa
    instances = BehaviorInstanceSerializer(many=True)

    def get_fields(self):
        # "class" is a keyword, so the field cannot be declared as an attribute
        fields = {"class": serializers.CharField(source="class_id", trim_whitespace=False)}
        fields.update(super().get_fields())
        return fields

    def validate_instances(self, instances):
        seen = set()
        for data in instances:
            if data["id"] in seen:
                raise serializers.ValidationError(f"duplicate instance id {data['id']!r}")
            seen.add(data["id"])
        return instances

    def create(self, validated_data):
        instances = [BehaviorInstance.from_props(**data) for data in validated_data["instances"]]
        return Corpus(validated_data["class_id"], instances)
