"""
Canonical string forms for points, concepts and concept classes.

Rendering is used for transcripts and CLI output; parsing is used to read
``--class`` and ``--target`` arguments.
"""

import re
from typing import Any, List, Optional, Tuple
from src.core.errors import ConceptSyntaxError
from src.models.concepts import (
    ClassId,
    ConceptDesc,
    Empty,
    FiniteSet,
    Interval,
    Pair,
    PrefixConcept,
    ProductConcept,
    Singleton,
    Tagged,
    UnionConcept,
    Vector,
)

LAMBDA = "λ"

_TOKEN = re.compile(r'\s*(?:(-?\d+)|("[^"]*")|([A-Za-zλ_][A-Za-z0-9_]*)|(\S))')


def render_symbols(s: Tuple[int, ...]) -> str:
    """
    Render a prefix-class symbol string.

    Args:
        s: Tuple of symbols

    Returns:
        Concatenated digits when every symbol is below 10, dot-separated otherwise

    Examples:
        >>> render_symbols((1, 2))
        "12"
        >>> render_symbols((1, 13))
        "1.13"
        >>> render_symbols(())
        ""
    """
    if all(0 <= a < 10 for a in s):
        return "".join(str(a) for a in s)
    return ".".join(str(a) for a in s)


def parse_symbols(text: str) -> Tuple[int, ...]:
    """
    Parse a symbol string produced by ``render_symbols``.

    Args:
        text: Digits, dot-separated numbers, or empty / ``λ`` for the empty string

    Returns:
        Tuple of symbols

    Raises:
        ConceptSyntaxError: If the text contains anything but digits and dots
    """
    if text in ("", LAMBDA):
        return ()
    parts = text.split(".") if "." in text else list(text)
    if not all(p.isdigit() for p in parts):
        raise ConceptSyntaxError(f"invalid symbol string: {text!r}")
    return tuple(int(p) for p in parts)


def render_point(x: Any) -> str:
    """Render a point in canonical form."""
    if isinstance(x, Pair):
        prefix = LAMBDA if not x.prefix else f'"{render_symbols(x.prefix)}"'
        return f"({prefix},{x.value})"
    if isinstance(x, Tagged):
        return f"tag({x.dim},{render_point(x.inner)})"
    if isinstance(x, Vector):
        return "(" + ",".join(render_point(c) for c in x) + ")"
    return str(x)


def render_concept(c: ConceptDesc) -> str:
    """Render a concept description in canonical form."""
    if isinstance(c, Interval):
        return f"[{c.lo},{c.hi}]"
    if isinstance(c, Singleton):
        return f"{{{c.j}}}"
    if isinstance(c, FiniteSet):
        ordered = sorted(c.elements, key=lambda e: (isinstance(e, str), e))
        return "{" + ",".join(str(e) for e in ordered) + "}"
    if isinstance(c, PrefixConcept):
        return f'c("{render_symbols(c.s)}")'
    if isinstance(c, ProductConcept):
        return "prod(" + ",".join(render_concept(p) for p in c.parts) + ")"
    if isinstance(c, UnionConcept):
        return "union(" + ",".join(render_concept(p) for p in c.parts) + ")"
    if isinstance(c, Empty):
        return "empty"
    raise ConceptSyntaxError(f"cannot render {c!r}")


class _Parser:
    """Recursive-descent parser over the canonical token stream."""

    def __init__(self, text: str, prefix_max_len: Optional[int] = None):
        self.text = text
        self.prefix_max_len = prefix_max_len
        self.tokens: List[Tuple[str, str]] = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if match is None or match.end() == pos:
                break
            pos = match.end()
            number, string, name, other = match.groups()
            if number is not None:
                self.tokens.append(("int", number))
            elif string is not None:
                self.tokens.append(("str", string[1:-1]))
            elif name is not None:
                self.tokens.append(("name", name))
            elif other is not None:
                self.tokens.append(("sym", other))
        self.index = 0

    def peek(self) -> Optional[Tuple[str, str]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, kind: Optional[str] = None, value: Optional[str] = None) -> str:
        token = self.peek()
        if token is None:
            raise ConceptSyntaxError(f"unexpected end of input in {self.text!r}")
        if (kind and token[0] != kind) or (value and token[1] != value):
            expected = value or kind
            raise ConceptSyntaxError(
                f"expected {expected!r} but found {token[1]!r} in {self.text!r}"
            )
        self.index += 1
        return token[1]

    def accept(self, value: str) -> bool:
        token = self.peek()
        if token is not None and token[0] == "sym" and token[1] == value:
            self.index += 1
            return True
        return False

    def done(self) -> None:
        if self.peek() is not None:
            raise ConceptSyntaxError(f"trailing input {self.peek()[1]!r} in {self.text!r}")

    def class_id(self) -> ClassId:
        name = self.take("name").lower()
        if name in ("prod", "union"):
            self.take("sym", "(")
            parts = [self.class_id()]
            while self.accept(","):
                parts.append(self.class_id())
            self.take("sym", ")")
            return _class(name, parts=tuple(parts))
        if name == "letters":
            return _class(name)
        self.take("sym", "(")
        numbers = [int(self.take("int"))]
        while self.accept(","):
            numbers.append(int(self.take("int")))
        self.take("sym", ")")
        if name == "prefix":
            if len(numbers) == 1 and self.prefix_max_len is not None:
                numbers.append(self.prefix_max_len)
            if len(numbers) != 2:
                raise ConceptSyntaxError("prefix takes (U, maxLen)")
            return _class(name, size=numbers[0], max_len=numbers[1])
        if len(numbers) != 1:
            raise ConceptSyntaxError(f"{name} takes exactly one size parameter")
        return _class(name, size=numbers[0])

    def concept(self) -> ConceptDesc:
        token = self.peek()
        if token is None:
            raise ConceptSyntaxError(f"empty concept spec {self.text!r}")
        if self.accept("["):
            lo = int(self.take("int"))
            self.take("sym", ",")
            hi = int(self.take("int"))
            self.take("sym", "]")
            if lo > hi:
                raise ConceptSyntaxError(f"interval bounds out of order in {self.text!r}")
            return Interval(lo=lo, hi=hi)
        if self.accept("{"):
            elements: List[Any] = []
            if not self.accept("}"):
                elements.append(self.element())
                while self.accept(","):
                    elements.append(self.element())
                self.take("sym", "}")
            return FiniteSet(elements=frozenset(elements))
        name = self.take("name")
        if name == "empty":
            return Empty()
        if name == "c":
            self.take("sym", "(")
            token = self.peek()
            symbols = self.take("str") if token and token[0] == "str" else self.take("name")
            self.take("sym", ")")
            return PrefixConcept(s=parse_symbols(symbols))
        if name in ("prod", "union"):
            self.take("sym", "(")
            parts = [self.concept()]
            while self.accept(","):
                parts.append(self.concept())
            self.take("sym", ")")
            if name == "prod":
                return ProductConcept(parts=tuple(parts))
            return UnionConcept(parts=tuple(parts))
        raise ConceptSyntaxError(f"unknown concept form {name!r} in {self.text!r}")

    def point(self) -> Any:
        if self.accept("("):
            coords = [self.point()]
            while self.accept(","):
                coords.append(self.point())
            self.take("sym", ")")
            return Vector(coords)
        token = self.peek()
        if token is not None and token[0] == "name" and token[1] == "tag":
            self.take("name")
            self.take("sym", "(")
            dim = int(self.take("int"))
            self.take("sym", ",")
            inner = self.point()
            self.take("sym", ")")
            return Tagged(dim, inner)
        return self.element()

    def element(self) -> Any:
        token = self.peek()
        if token is not None and token[0] == "int":
            return int(self.take("int"))
        return self.take("name")


def _class(name: str, **kwargs: Any) -> ClassId:
    try:
        return ClassId(name=name, **kwargs)
    except ValueError as e:
        raise ConceptSyntaxError(f"invalid class {name!r}: {e}") from e


def parse_class(text: str, prefix_max_len: Optional[int] = None) -> ClassId:
    """
    Parse a class spec such as ``prod(intervals(16),intervals(16))``.

    Args:
        text: Class spec string
        prefix_max_len: maxLen for a ``prefix(U)`` spec that omits it; required when None

    Returns:
        The parsed class identifier

    Raises:
        ConceptSyntaxError: On malformed input
    """
    parser = _Parser(text, prefix_max_len)
    class_id = parser.class_id()
    parser.done()
    return class_id


def parse_concept(text: str) -> ConceptDesc:
    """
    Parse a concept spec such as ``prod([3,5],[2,8])`` or ``c("12")``.

    The result is class-agnostic; ``ConceptClass.normalize`` maps it onto the
    class's own descriptions (``{2}`` becomes a singleton for singleton classes).

    Args:
        text: Concept spec string

    Returns:
        The parsed concept description

    Raises:
        ConceptSyntaxError: On malformed input
    """
    parser = _Parser(text)
    concept = parser.concept()
    parser.done()
    return concept


def parse_point(text: str) -> Any:
    """
    Parse a point such as ``(4,2)``, ``(a,-3)`` or ``tag(1,4)``.

    Tuples become ``Vector`` values; prefix-class pairs are not parsed.

    Raises:
        ConceptSyntaxError: On malformed input
    """
    parser = _Parser(text)
    point = parser.point()
    parser.done()
    return point
