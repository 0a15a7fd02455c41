"""
Abstract syntax and parser for group and homomorphism expressions.

    expr  := term ('x' term)*
    term  := 'Z(' int ')' | 'D(' int ')' | 'Q8' | 'S(' int ')' | 'A(' int ')'
           | 'E(' int ',' int ')' | 'sd(' expr ',' expr ',' action ')'
           | 'quot(' expr ',' '[' ints ']' ')' | '(' expr ')'
    hom   := 'id(' expr ')' | 'quot(' expr ',' '[' ints ']' ')'
           | 'proj(' expr ',' int ')' | 'incl(' expr ',' int ')'
           | 'map(' expr ',' expr ',' '[' ints ']' ')'
           | 'ev(' expr ',' expr ',' int ')' | 'triv(' expr ',' expr ')'
           | 'prod(' hom ',' hom ')'

Products associate to the left. Whitespace is ignored and error offsets are
byte offsets into the UTF-8 input.
"""
import re
from typing import List, Literal, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from sectio.config.constants import ActionName, HomKind
from sectio.config.settings import settings
from sectio.errors import ExpressionSyntaxError

GroupKind = Literal["Z", "D", "Q8", "S", "A", "E", "product", "sd", "quot"]

_SINGLE_PARAM = ("Z", "D", "S", "A")


class GroupExpr(BaseModel):
    """A group expression node."""
    model_config = ConfigDict(frozen=True)

    kind: GroupKind
    params: Tuple[int, ...] = ()
    args: Tuple["GroupExpr", ...] = ()
    action: Optional[ActionName] = None

    def pretty(self) -> str:
        if self.kind in _SINGLE_PARAM:
            return f"{self.kind}({self.params[0]})"
        if self.kind == "Q8":
            return "Q8"
        if self.kind == "E":
            return f"E({self.params[0]},{self.params[1]})"
        if self.kind == "product":
            left, right = self.args
            right_text = right.pretty()
            if right.kind == "product":
                right_text = f"({right_text})"
            return f"{left.pretty()}x{right_text}"
        if self.kind == "sd":
            return f"sd({self.args[0].pretty()},{self.args[1].pretty()},{self.action.value})"
        return f"quot({self.args[0].pretty()},{_int_list(self.params)})"


class HomSpec(BaseModel):
    """A homomorphism expression node."""
    model_config = ConfigDict(frozen=True)

    kind: HomKind
    groups: Tuple[GroupExpr, ...] = ()
    index: Optional[int] = None
    values: Tuple[int, ...] = ()
    homs: Tuple["HomSpec", ...] = ()

    def pretty(self) -> str:
        g = [e.pretty() for e in self.groups]
        if self.kind == HomKind.IDENTITY:
            return f"id({g[0]})"
        if self.kind == HomKind.QUOTIENT:
            return f"quot({g[0]},{_int_list(self.values)})"
        if self.kind in (HomKind.PROJECTION, HomKind.INCLUSION):
            return f"{self.kind.value}({g[0]},{self.index})"
        if self.kind == HomKind.MAP:
            return f"map({g[0]},{g[1]},{_int_list(self.values)})"
        if self.kind == HomKind.EVALUATION:
            return f"ev({g[0]},{g[1]},{self.index})"
        if self.kind == HomKind.TRIVIAL:
            return f"triv({g[0]},{g[1]})"
        return f"prod({self.homs[0].pretty()},{self.homs[1].pretty()})"


GroupExpr.model_rebuild()
HomSpec.model_rebuild()


def _int_list(values: Tuple[int, ...]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


class Token(NamedTuple):
    kind: str  # "int", "word", "punct", "unknown" or "end"
    text: str
    offset: int  # byte offset


# Longest words first so that "trivial" wins over "triv" and "quot" over "Q8".
_WORDS = (
    "trivial", "quot", "triv", "proj", "incl", "prod", "map", "inv",
    "sd", "ev", "id", "Q8", "Z", "D", "S", "A", "E", "x",
)
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<word>" + "|".join(_WORDS) + r")|(?P<punct>[()\[\],])|(?P<unknown>\S))"
)


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    byte = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            # only whitespace remains
            break
        kind = m.lastgroup
        start = m.start(kind)
        byte += len(text[pos:start].encode("utf-8"))
        tokens.append(Token(kind, m.group(kind), byte))
        byte += len(m.group(kind).encode("utf-8"))
        pos = m.end()
    tokens.append(Token("end", "", len(text.encode("utf-8"))))
    return tokens


class Parser:
    """Recursive-descent parser over one input string."""

    def __init__(self, text: str):
        size = len(text.encode("utf-8"))
        if size > settings.MAX_INPUT_BYTES:
            raise ExpressionSyntaxError(settings.MAX_INPUT_BYTES, ["end of input"], "input longer than the limit")
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, *expected: str):
        tok = self.current
        raise ExpressionSyntaxError(tok.offset, expected, tok.text or None)

    def accept(self, text: str) -> bool:
        if self.current.text == text and self.current.kind in ("word", "punct"):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            self.fail(repr(text))

    def integer(self) -> int:
        tok = self.current
        if tok.kind != "int":
            self.fail("integer")
        self.pos += 1
        return int(tok.text)

    def int_list(self) -> Tuple[int, ...]:
        self.expect("[")
        values: List[int] = []
        if not self.accept("]"):
            values.append(self.integer())
            while self.accept(","):
                values.append(self.integer())
            self.expect("]")
        return tuple(values)

    def end(self) -> None:
        if self.current.kind != "end":
            self.fail("end of input", "'x'")

    # groups
    def expr(self) -> GroupExpr:
        node = self.term()
        while self.accept("x"):
            node = GroupExpr(kind="product", args=(node, self.term()))
        return node

    def term(self) -> GroupExpr:
        tok = self.current
        if tok.kind == "word" and tok.text in _SINGLE_PARAM:
            self.pos += 1
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return GroupExpr(kind=tok.text, params=(n,))
        if self.accept("Q8"):
            return GroupExpr(kind="Q8")
        if self.accept("E"):
            self.expect("(")
            p = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            return GroupExpr(kind="E", params=(p, k))
        if self.accept("sd"):
            self.expect("(")
            a = self.expr()
            self.expect(",")
            h = self.expr()
            self.expect(",")
            action = self.action()
            self.expect(")")
            return GroupExpr(kind="sd", args=(a, h), action=action)
        if self.accept("quot"):
            self.expect("(")
            g = self.expr()
            self.expect(",")
            gens = self.int_list()
            self.expect(")")
            return GroupExpr(kind="quot", params=gens, args=(g,))
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self.fail("'Z'", "'D'", "'Q8'", "'S'", "'A'", "'E'", "'sd'", "'quot'", "'('")

    def action(self) -> ActionName:
        for name in ActionName:
            if self.accept(name.value):
                return name
        self.fail(*(repr(a.value) for a in ActionName))

    # homomorphisms
    def hom(self) -> HomSpec:
        tok = self.current
        if self.accept("id"):
            self.expect("(")
            g = self.expr()
            self.expect(")")
            return HomSpec(kind=HomKind.IDENTITY, groups=(g,))
        if self.accept("quot"):
            self.expect("(")
            g = self.expr()
            self.expect(",")
            gens = self.int_list()
            self.expect(")")
            return HomSpec(kind=HomKind.QUOTIENT, groups=(g,), values=gens)
        if tok.text in ("proj", "incl") and tok.kind == "word":
            self.pos += 1
            self.expect("(")
            g = self.expr()
            self.expect(",")
            i = self.integer()
            self.expect(")")
            return HomSpec(kind=HomKind(tok.text), groups=(g,), index=i)
        if self.accept("map"):
            self.expect("(")
            g = self.expr()
            self.expect(",")
            h = self.expr()
            self.expect(",")
            images = self.int_list()
            self.expect(")")
            return HomSpec(kind=HomKind.MAP, groups=(g, h), values=images)
        if self.accept("ev"):
            self.expect("(")
            g = self.expr()
            self.expect(",")
            h = self.expr()
            self.expect(",")
            a = self.integer()
            self.expect(")")
            return HomSpec(kind=HomKind.EVALUATION, groups=(g, h), index=a)
        if self.accept("triv"):
            self.expect("(")
            g = self.expr()
            self.expect(",")
            h = self.expr()
            self.expect(")")
            return HomSpec(kind=HomKind.TRIVIAL, groups=(g, h))
        if self.accept("prod"):
            self.expect("(")
            f1 = self.hom()
            self.expect(",")
            f2 = self.hom()
            self.expect(")")
            return HomSpec(kind=HomKind.PRODUCT, homs=(f1, f2))
        self.fail(*(repr(k.value) for k in HomKind))


def parse_group(text: str) -> GroupExpr:
    """
    Parse a group expression.

    Raises:
        ExpressionSyntaxError: With the byte offset and the expected tokens
    """
    parser = Parser(text)
    node = parser.expr()
    parser.end()
    return node


def parse_hom(text: str) -> HomSpec:
    """Parse a homomorphism expression."""
    parser = Parser(text)
    node = parser.hom()
    parser.end()
    return node
