from traces.exceptions import FormatError


class EmptyCorpusError(Exception):
    pass


class NoSuccessfulInstancesError(Exception):
    pass


class KnowledgeBaseFormatError(FormatError):
    pass
