import io
from pathlib import Path
from typing import Iterator

from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer
from traces.exceptions import CorpusFormatError
from traces.serializers import CorpusSerializer
from traces.types import BehaviorInstance, Corpus, Transition


def transitions(instance: BehaviorInstance) -> list[Transition]:
    """(states[i], actions[i], states[i + 1]) for every action, in order."""
    return [
        Transition(instance.states[index], action, instance.states[index + 1])
        for index, action in enumerate(instance.actions)
    ]


def corpus_transitions(corpus: Corpus) -> Iterator[Transition]:
    for instance in corpus:
        yield from transitions(instance)


def parse_json(content: str | bytes, error_class):
    """
    Decode a JSON document with DRF's parser.

    Raises:
        error_class: with the parser's message, which carries line and column
    """
    if isinstance(content, str):
        content = content.encode()
    try:
        return JSONParser().parse(io.BytesIO(content))
    except ParseError as error:
        raise error_class([error.detail]) from error


def render_json(data) -> bytes:
    return JSONRenderer().render(data)


def parse_corpus(content: str | bytes) -> Corpus:
    """
    Parse a corpus file.

    Raises:
        CorpusFormatError: on malformed JSON, terms that are not canonical or
                           instances breaking the trace invariants
    """
    serializer = CorpusSerializer(data=parse_json(content, CorpusFormatError))
    if not serializer.is_valid():
        raise CorpusFormatError(serializer.errors)
    return serializer.save()


def serialize_corpus(corpus: Corpus) -> bytes:
    return render_json(CorpusSerializer(corpus).data)


def read_corpus(path: Path) -> Corpus:
    return parse_corpus(Path(path).read_bytes())


def write_corpus(path: Path, corpus: Corpus):
    Path(path).write_bytes(serialize_corpus(corpus))
