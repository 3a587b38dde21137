"""Text notation for continued fractions.

    cf   := "[" int ( ";" seq )? "]"
    seq  := item ("," item)*
    item := posint | "(" group ")" rep
    rep  := "^" posint | "*"

Inside a group, entries may themselves be ``(...)^k`` blocks, one level deep.
At most one ``*`` item is allowed and it must be last; whitespace is ignored.
"""

from typing import List, Tuple, Union

from .cf import FiniteCF, PeriodicCF
from .errors import CFSyntaxError, NotEventuallyPeriodicError


class _Parser:
    """Recursive-descent parser keeping offsets into the original text."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: int = None) -> CFSyntaxError:
        return CFSyntaxError(message, self.text, self.pos if position is None else position)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {char!r}, found {found}")
        self.pos += 1

    def integer(self, positive: bool) -> int:
        self.skip()
        start = self.pos
        if not positive and self.peek() in ("+", "-"):
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            raise self.error("expected an integer", start)
        value = int(self.text[start:self.pos])
        if positive and value < 1:
            raise self.error("partial quotients must be positive", start)
        return value

    def parse(self) -> Tuple[int, List[int], List[int], bool]:
        self.expect("[")
        a0 = self.integer(positive=False)
        prefix: List[int] = []
        period: List[int] = []
        periodic = False
        if self.peek() == ";":
            self.pos += 1
            while True:
                if periodic:
                    raise self.error("a '*' item must be the last item")
                if self.peek() == "(":
                    entries, forever = self.group(nested=True)
                    if forever:
                        period, periodic = entries, True
                    else:
                        prefix.extend(entries)
                else:
                    prefix.append(self.integer(positive=True))
                if self.peek() != ",":
                    break
                self.pos += 1
        self.expect("]")
        if self.peek():
            raise self.error("unexpected trailing input")
        return a0, prefix, period, periodic

    def group(self, nested: bool) -> Tuple[List[int], bool]:
        """Parse ``(...)rep``; returns the expanded entries and whether rep is ``*``."""
        self.expect("(")
        entries: List[int] = []
        while True:
            if self.peek() == "(":
                if not nested:
                    raise self.error("groups nest at most one level deep")
                start = self.pos
                inner, forever = self.group(nested=False)
                if forever:
                    raise self.error("'*' is not allowed inside a group", start)
                entries.extend(inner)
            else:
                entries.append(self.integer(positive=True))
            if self.peek() != ",":
                break
            self.pos += 1
        self.expect(")")
        marker = self.peek()
        if marker == "*":
            self.pos += 1
            return entries, True
        if marker == "^":
            self.pos += 1
            return entries * self.integer(positive=True), False
        raise self.error("expected '^k' or '*' after a group")


def parse_expression(text: str) -> Union[PeriodicCF, FiniteCF]:
    """Parse a CF expression; finite input gives a FiniteCF."""
    a0, prefix, period, periodic = _Parser(text).parse()
    if periodic:
        return PeriodicCF(a0, tuple(prefix), tuple(period))
    return FiniteCF(a0, tuple(prefix))


def parse_cf(text: str) -> PeriodicCF:
    """Parse an eventually periodic CF expression such as ``[2;(1,1,3)*]``."""
    cf = parse_expression(text)
    if isinstance(cf, FiniteCF):
        raise NotEventuallyPeriodicError(
            f"{text.strip()} is a finite (rational) expansion; a '*' item is required"
        )
    return cf


def format_cf(cf: Union[PeriodicCF, FiniteCF]) -> str:
    """Inverse of :func:`parse_expression` for canonical values."""
    if isinstance(cf, FiniteCF):
        if not cf.word:
            return f"[{cf.a0}]"
        return f"[{cf.a0};{','.join(map(str, cf.word))}]"
    items = [str(a) for a in cf.preperiod]
    items.append(f"({','.join(map(str, cf.period))})*")
    return f"[{cf.a0};{','.join(items)}]"
