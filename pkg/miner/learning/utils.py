from pathlib import Path

from learning.exceptions import KnowledgeBaseFormatError
from learning.serializers import KnowledgeBaseSerializer
from learning.types import KnowledgeBase
from traces.utils import parse_json, render_json


def parse_knowledge_base(content: str | bytes) -> KnowledgeBase:
    """
    Raises:
        KnowledgeBaseFormatError: on malformed JSON or sections that do not validate
    """
    serializer = KnowledgeBaseSerializer(data=parse_json(content, KnowledgeBaseFormatError))
    if not serializer.is_valid():
        raise KnowledgeBaseFormatError(serializer.errors)
    return serializer.save()


def serialize_knowledge_base(kb: KnowledgeBase) -> bytes:
    return render_json(KnowledgeBaseSerializer(kb).data)


def read_knowledge_base(path: Path) -> KnowledgeBase:
    return parse_knowledge_base(Path(path).read_bytes())


def write_knowledge_base(path: Path, kb: KnowledgeBase):
    Path(path).write_bytes(serialize_knowledge_base(kb))
