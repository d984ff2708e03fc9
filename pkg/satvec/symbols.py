import re
from dataclasses import dataclass
from typing import Optional, Tuple

from satvec.exceptions import SignatureError

ROOT = "root"
INTERNAL = "internal"
ORDERED = "ordered"
UNORDERED = "unordered"

_DECLARATION = re.compile(r"^(?P<label>.+)/(?P<arity>\d+)$")


@dataclass(frozen=True)
class Symbol:
    """A node label together with its arity and orderedness.

    Symbols with the same label and different arities are distinct.
    A symbol carrying a depth or an argument position is a masked symbol: masked variants are
    distinct symbols for every downstream purpose and `base` strips them losslessly.

    >>> Symbol("f", 2)
    Symbol('f/2')
    >>> str(Symbol("g", 1, depth=2, arg_position=1))
    'g@d2@1'
    >>> Symbol("g", 1, arg_position=1).base
    Symbol('g/1')
    """

    label: str
    arity: int = 0
    ordered: bool = True
    depth: Optional[int] = None
    """Distance from the root, when a depth mask is applied"""
    arg_position: Optional[int] = None
    """1-based position in the parent's argument list, when an argument-number mask is applied"""

    @property
    def base(self) -> "Symbol":
        if not self.is_masked:
            return self
        return Symbol(self.label, self.arity, self.ordered)

    @property
    def is_masked(self) -> bool:
        return self.depth is not None or self.arg_position is not None

    @property
    def is_leaf(self) -> bool:
        return self.arity == 0

    @property
    def mask(self) -> Tuple[Optional[int], Optional[int]]:
        return self.depth, self.arg_position

    def masked(self, depth: Optional[int] = None, arg_position: Optional[int] = None) -> "Symbol":
        return Symbol(self.label, self.arity, self.ordered, depth, arg_position)

    @property
    def sort_key(self) -> Tuple:
        """The fixed total order on symbols used wherever a canonical order is needed"""
        return (
            self.label,
            self.arity,
            not self.ordered,
            -1 if self.depth is None else self.depth,
            -1 if self.arg_position is None else self.arg_position,
        )

    @property
    def declaration(self) -> str:
        return f"{self.label}/{self.arity}"

    def __str__(self) -> str:
        text = self.label
        if self.depth is not None:
            text += f"@d{self.depth}"
        if self.arg_position is not None:
            text += f"@{self.arg_position}"
        return text

    def __repr__(self) -> str:
        if self.is_masked:
            return f"Symbol('{self}/{self.arity}')"
        return f"Symbol('{self.declaration}')"


def parse_symbol(text: str, ordering: str = ORDERED) -> Symbol:
    """Parse a `label/arity` declaration.

    >>> parse_symbol("p/2")
    Symbol('p/2')
    >>> parse_symbol("or/3", UNORDERED).ordered
    False
    >>> parse_symbol("a/0", UNORDERED)
    Traceback (most recent call last):
    ...
    satvec.exceptions.SignatureError: a/0: a symbol without arguments cannot be unordered
    """
    match = _DECLARATION.match(text.strip())
    if match is None:
        raise SignatureError(f"Expected a declaration of the form label/arity, got '{text}'")
    if ordering not in (ORDERED, UNORDERED):
        raise SignatureError(f"{text}: unknown ordering '{ordering}'")
    return make_symbol(match.group("label"), int(match.group("arity")), ordering == ORDERED)


def make_symbol(label: str, arity: int, ordered: bool = True) -> Symbol:
    if not label or any(c.isspace() for c in label):
        raise SignatureError(f"Invalid symbol label '{label}'")
    if arity < 0:
        raise SignatureError(f"{label}/{arity}: arity must be non-negative")
    if arity == 0 and not ordered:
        raise SignatureError(f"{label}/{arity}: a symbol without arguments cannot be unordered")
    return Symbol(label, arity, ordered)
