"""
Ground first-order terms.

A term is an identifier optionally followed by a parenthesised argument list,
an argument being a term or a bracketed list of arguments:

    term  := ident | ident "(" args ")"
    args  := arg ("," arg)*
    arg   := term | "[" args? "]"
    ident := [a-z][a-z0-9_]*

The canonical text form has no whitespace and is what every file stores.
"""
import re
from typing import NamedTuple, Union

from traces.exceptions import TermSyntaxError

IDENTIFIER = re.compile(r"[a-z][a-z0-9_]*")


class Term(NamedTuple):
    functor: str
    args: tuple["Arg", ...] = ()

    def __str__(self):
        return format_term(self)

    @property
    def arity(self) -> int:
        return len(self.args)


class TermList(NamedTuple):
    items: tuple["Arg", ...] = ()

    def __str__(self):
        return format_term(self)


Arg = Union[Term, TermList]


def compound(functor: str, *args: Union[str, Arg]) -> Term:
    """Build a term, turning plain string arguments into constants."""
    return Term(functor, tuple(Term(arg) if isinstance(arg, str) else arg for arg in args))


def format_term(term: Arg) -> str:
    if isinstance(term, TermList):
        return "[" + ",".join(format_term(item) for item in term.items) + "]"
    if not term.args:
        return term.functor
    return f"{term.functor}({','.join(format_term(arg) for arg in term.args)})"


def sort_terms(terms) -> list:
    return sorted(terms, key=format_term)


def display_term(term: Arg) -> str:
    """
    Presentation form used by text reports: identifiers are CamelCased,
    so `on(a,b)` reads `On(A,B)` and `must_precede` reads `MustPrecede`.
    """
    if isinstance(term, TermList):
        return "[" + ",".join(display_term(item) for item in term.items) + "]"
    functor = "".join(part[:1].upper() + part[1:] for part in term.functor.split("_"))
    if not term.args:
        return functor
    return f"{functor}({','.join(display_term(arg) for arg in term.args)})"


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.offset = 0

    def parse(self) -> Term:
        term = self._term()
        if self.offset != len(self.text):
            self._fail("unexpected trailing input")
        return term

    def _fail(self, reason: str):
        raise TermSyntaxError(self.text, self.offset, reason)

    def _peek(self) -> str:
        return self.text[self.offset : self.offset + 1]

    def _expect(self, char: str):
        if self._peek() != char:
            self._fail(f"expected {char!r}")
        self.offset += 1

    def _identifier(self) -> str:
        match = IDENTIFIER.match(self.text, self.offset)
        if match is None:
            self._fail("expected a lowercase identifier")
        self.offset = match.end()
        return match.group()

    def _term(self) -> Term:
        functor = self._identifier()
        if self._peek() != "(":
            return Term(functor)
        self.offset += 1
        return Term(functor, self._args(")"))

    def _args(self, closing: str) -> tuple[Arg, ...]:
        args = [self._arg()]
        while self._peek() == ",":
            self.offset += 1
            args.append(self._arg())
        self._expect(closing)
        return tuple(args)

    def _arg(self) -> Arg:
        if self._peek() != "[":
            return self._term()
        self.offset += 1
        if self._peek() == "]":
            self.offset += 1
            return TermList()
        return TermList(self._args("]"))


def parse_term(text: str) -> Term:
    """
    Parse the canonical text form of a term.

    Raises:
        TermSyntaxError: if the text is not a canonical term
    """
    if not isinstance(text, str):
        raise TermSyntaxError(repr(text), 0, "expected a string")
    return _TermParser(text).parse()
