class TermSyntaxError(Exception):
    def __init__(self, term: str, offset: int, reason: str):
        super().__init__(f"{reason} at offset {offset} in {term!r}")
        self.term = term
        self.offset = offset
        self.reason = reason


class InvariantError(Exception):
    pass


class FormatError(Exception):
    """
    A file did not validate. `errors` holds the serializer error payload,
    the message flattens it into `path: message` lines.
    """

    def __init__(self, errors):
        self.errors = errors
        super().__init__("; ".join(describe_errors(errors)) or "invalid content")


class CorpusFormatError(FormatError):
    pass


def describe_errors(detail, path: str = ""):
    if isinstance(detail, dict):
        for key, value in detail.items():
            if isinstance(key, int):
                yield from describe_errors(value, f"{path}[{key}]")
            elif key == "non_field_errors":
                yield from describe_errors(value, path)
            else:
                yield from describe_errors(value, f"{path}.{key}" if path else str(key))
    elif isinstance(detail, list):
        for index, value in enumerate(detail):
            if isinstance(value, str):
                yield f"{path}: {value}" if path else str(value)
            elif value:
                yield from describe_errors(value, f"{path}[{index}]")
    else:
        yield f"{path}: {detail}" if path else str(detail)
