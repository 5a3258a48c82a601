"""Textual group specifications: parse, print and build."""

from __future__ import annotations

import logging
import re
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from math import gcd, prod

from . import constructions
from .centralizers import center
from .group_core import CentraError, Group, quotient

_LOGGER = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<int>-?\d+)|(?P<punct>[(),]))"
)


class ParseError(CentraError):
    """Malformed group specification."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class Family(StrEnum):
    """DSL head symbols."""

    CYCLIC = "C"
    DIHEDRAL = "D"
    SEMIDIHEDRAL = "SD"
    DICYCLIC = "T"
    V_GROUP = "V"
    U_GROUP = "U"
    SYMMETRIC = "S"
    ALTERNATING = "A"
    ELEMENTARY_ABELIAN = "EA"
    HOLOMORPH_CYCLIC = "Hol"
    SDP = "sdp"
    R = "R"
    G21 = "G21"
    PSL2 = "PSL2"
    SL2 = "SL2"
    HEISENBERG = "Heis"
    MODULAR = "M"
    PRODUCT = "prod"
    QUOT_CENTER = "quotZ"


ARITY: dict[Family, int] = {
    Family.CYCLIC: 1,
    Family.DIHEDRAL: 1,
    Family.SEMIDIHEDRAL: 1,
    Family.DICYCLIC: 1,
    Family.V_GROUP: 1,
    Family.U_GROUP: 2,
    Family.SYMMETRIC: 1,
    Family.ALTERNATING: 1,
    Family.ELEMENTARY_ABELIAN: 2,
    Family.HOLOMORPH_CYCLIC: 1,
    Family.SDP: 3,
    Family.R: 0,
    Family.G21: 0,
    Family.PSL2: 1,
    Family.SL2: 1,
    Family.HEISENBERG: 1,
    Family.MODULAR: 1,
}


@dataclass(frozen=True)
class GroupSpec:
    """Parse tree of a group specification.

    Atoms carry integer params; prod carries two or more children and
    quotZ exactly one.
    """

    family: Family
    params: tuple[int, ...] = ()
    children: tuple[GroupSpec, ...] = ()

    def __post_init__(self) -> None:
        if self.family is Family.PRODUCT:
            valid = len(self.children) >= 2 and not self.params
        elif self.family is Family.QUOT_CENTER:
            valid = len(self.children) == 1 and not self.params
        else:
            valid = (
                len(self.params) == ARITY[self.family] and not self.children
            )
        if not valid:
            raise ValueError(f"malformed {self.family} node")

    def __str__(self) -> str:
        return format_spec(self)


def format_spec(spec: GroupSpec) -> str:
    """Canonical text of a spec; parse_spec inverts it."""
    if spec.children:
        inner = ",".join(format_spec(child) for child in spec.children)
        return f"{spec.family}({inner})"
    if not spec.params:
        return str(spec.family)
    return f"{spec.family}({','.join(map(str, spec.params))})"


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].isspace():
                break
            match = _TOKEN.match(text, pos)
            if match is None:
                offset = len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(
                    f"unexpected character {text[pos + offset]!r}",
                    pos + offset,
                )
            kind = match.lastgroup
            assert kind is not None
            self.tokens.append((kind, match.group(kind), match.start(kind)))
            pos = match.end()
        self.index = 0

    def _peek(self) -> tuple[str, str, int] | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def _position(self) -> int:
        token = self._peek()
        return token[2] if token else len(self.text)

    def _expect(self, value: str) -> None:
        token = self._peek()
        if token is None or token[1] != value:
            found = "end of input" if token is None else repr(token[1])
            raise ParseError(
                f"expected {value!r}, found {found}", self._position()
            )
        self.index += 1

    def _integer(self) -> int:
        token = self._peek()
        if token is None or token[0] != "int":
            raise ParseError("expected an integer", self._position())
        self.index += 1
        return int(token[1])

    def spec(self) -> GroupSpec:
        token = self._peek()
        if token is None or token[0] != "name":
            raise ParseError("expected a group name", self._position())
        try:
            family = Family(token[1])
        except ValueError:
            raise ParseError(f"unknown group {token[1]!r}", token[2]) from None
        self.index += 1
        if family is Family.PRODUCT:
            self._expect("(")
            children = [self.spec()]
            self._expect(",")
            children.append(self.spec())
            while (token := self._peek()) is not None and token[1] == ",":
                self.index += 1
                children.append(self.spec())
            self._expect(")")
            return GroupSpec(family, children=tuple(children))
        if family is Family.QUOT_CENTER:
            self._expect("(")
            child = self.spec()
            self._expect(")")
            return GroupSpec(family, children=(child,))
        arity = ARITY[family]
        if arity == 0:
            return GroupSpec(family)
        self._expect("(")
        params = [self._integer()]
        for _ in range(arity - 1):
            self._expect(",")
            params.append(self._integer())
        self._expect(")")
        return GroupSpec(family, tuple(params))

    def parse(self) -> GroupSpec:
        spec = self.spec()
        if self._peek() is not None:
            raise ParseError("trailing input", self._position())
        return spec


def parse_spec(text: str) -> GroupSpec:
    """Parse DSL text such as "prod(S(3),quotZ(SD(2)))"."""
    return _Parser(text).parse()


def _euler_phi(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def _factorial(n: int) -> int:
    return prod(range(1, n + 1))


def spec_order(spec: GroupSpec) -> int | None:
    """Closed-form order of a spec, or None when it needs a build."""
    p = spec.params
    match spec.family:
        case Family.CYCLIC | Family.DIHEDRAL:
            return p[0]
        case Family.SEMIDIHEDRAL | Family.V_GROUP:
            return 8 * p[0]
        case Family.DICYCLIC:
            return 4 * p[0]
        case Family.U_GROUP:
            return 2 * p[0] * p[1]
        case Family.SYMMETRIC:
            return _factorial(p[0])
        case Family.ALTERNATING:
            return max(1, _factorial(p[0]) // 2)
        case Family.ELEMENTARY_ABELIAN:
            return p[0] ** p[1]
        case Family.HOLOMORPH_CYCLIC:
            return p[0] * _euler_phi(p[0])
        case Family.SDP:
            return p[0] * p[1]
        case Family.R:
            return 20
        case Family.G21:
            return 21
        case Family.PSL2:
            q = p[0]
            return q * (q * q - 1) // gcd(2, q - 1)
        case Family.SL2:
            return p[0] * (p[0] ** 2 - 1)
        case Family.HEISENBERG:
            return p[0] ** 3
        case Family.MODULAR:
            return 2 ** p[0]
        case Family.PRODUCT:
            orders = [spec_order(child) for child in spec.children]
            if any(order is None for order in orders):
                return None
            return prod(orders)  # type: ignore[arg-type]
    return None


_BUILDERS: dict[Family, Callable[..., Group]] = {
    Family.CYCLIC: constructions.cyclic,
    Family.DIHEDRAL: constructions.dihedral,
    Family.SEMIDIHEDRAL: constructions.semidihedral,
    Family.DICYCLIC: constructions.dicyclic,
    Family.V_GROUP: constructions.v_group,
    Family.U_GROUP: constructions.u_group,
    Family.SYMMETRIC: constructions.symmetric,
    Family.ALTERNATING: constructions.alternating,
    Family.ELEMENTARY_ABELIAN: constructions.elementary_abelian,
    Family.HOLOMORPH_CYCLIC: constructions.holomorph_cyclic,
    Family.SDP: constructions.sdp_cyclic,
    Family.R: lambda: constructions.sdp_cyclic(5, 4, 2),
    Family.G21: lambda: constructions.sdp_cyclic(7, 3, 2),
    Family.PSL2: constructions.psl2,
    Family.SL2: constructions.sl2,
    Family.HEISENBERG: constructions.heisenberg,
    Family.MODULAR: constructions.modular_group,
}


def build(spec: GroupSpec) -> Group:
    """Construct the group a spec names."""
    if spec.family is Family.PRODUCT:
        groups = [build(child) for child in spec.children]
        result = groups[0]
        for factor in groups[1:]:
            result = constructions.direct_product(result, factor)
        return result
    if spec.family is Family.QUOT_CENTER:
        inner = build(spec.children[0])
        return quotient(inner, center(inner))
    _LOGGER.debug("Building %s", format_spec(spec))
    return _BUILDERS[spec.family](*spec.params)
