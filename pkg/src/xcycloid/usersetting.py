"""Parse ``-u 'R=3;r=1;d=1;N=100'`` style override strings.

Grammar::

    table := WS? (pair (WS? ';' WS? pair)*)? WS?
    pair  := IDENT WS? '=' WS? NUMBER

A NUMBER without a fraction or exponent is an integer, anything else is a
real. Later bindings of the same name win, and a warning is recorded.
"""

from __future__ import annotations

import math
import re
from dataclasses import replace
from typing import Iterator, Union

from .core import InvalidParamsError, TrochoidParams

Number = Union[int, float]

_PAIR = re.compile(
    r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)\s*=\s*"
    r"(?P<value>[+-]?(?:\d+(?P<frac>\.\d*)?|(?P<lead>\.\d+))(?P<exp>[eE][+-]?\d+)?)",
    re.ASCII,
)
_WS = " \t\r\n\f\v"

RECOGNIZED = ("sign", "R", "r", "d", "N", "turns")
_INTEGER_FIELDS = {"sign", "N", "turns"}


class UsersettingError(ValueError):
    pass


class ParseError(UsersettingError):
    def __init__(self, index: int, segment: str, reason: str = "expected name=number"):
        self.index = index
        self.segment = segment
        super().__init__(f"segment {index} {segment!r}: {reason}")


class OverrideError(UsersettingError):
    pass


class OverrideTypeError(OverrideError, TypeError):
    pass


class OverrideValidationError(OverrideError):
    pass


class VarTable:
    """Ordered name -> number bindings."""

    def __init__(self, entries=(), warnings=()):
        self._values: dict[str, Number] = {}
        self.warnings: list[str] = list(warnings)
        for name, value in entries:
            self.set(name, value)

    def set(self, name: str, value: Number) -> None:
        if name in self._values:
            self.warnings.append(f"duplicate binding for {name!r}; last value wins")
        self._values[name] = value

    @property
    def entries(self) -> list[tuple[str, Number]]:
        return list(self._values.items())

    def __getitem__(self, name: str) -> Number:
        return self._values[name]

    def __contains__(self, name: object) -> bool:
        return name in self._values

    def __iter__(self) -> Iterator[tuple[str, Number]]:
        return iter(self._values.items())

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VarTable):
            return NotImplemented
        return [(n, type(v), v) for n, v in self] == [(n, type(v), v) for n, v in other]

    def __repr__(self) -> str:
        return f"VarTable({self.entries!r})"

    def to_text(self) -> str:
        return ";".join(f"{name}={value!r}" for name, value in self)


def parse_usersetting(src: str) -> VarTable:
    table = VarTable()
    if not src.strip(_WS):
        return table
    for index, segment in enumerate(src.split(";")):
        text = segment.strip(_WS)
        if not text:
            raise ParseError(index, segment, "empty segment")
        m = _PAIR.fullmatch(text)
        if m is None:
            raise ParseError(index, segment)
        literal = m.group("value")
        if m.group("frac") is None and m.group("lead") is None and m.group("exp") is None:
            value: Number = int(literal)
        else:
            value = float(literal)
            if not math.isfinite(value):
                raise ParseError(index, segment, "number out of range")
        table.set(m.group("name"), value)
    return table


def apply_overrides(defaults: TrochoidParams, overrides: VarTable) -> TrochoidParams:
    changes: dict[str, Number] = {}
    for name, value in overrides:
        if name == "k":
            raise OverrideError("k is derived as r/R and cannot be overridden; set r or R instead")
        if name not in RECOGNIZED:
            raise OverrideError(
                f"unknown variable {name!r}; recognized: {', '.join(RECOGNIZED)}")
        if name in _INTEGER_FIELDS and not isinstance(value, int):
            raise OverrideTypeError(f"{name} must be an integer, got {value!r}")
        changes[name] = value if name in _INTEGER_FIELDS else float(value)
    try:
        return replace(defaults, **changes)
    except InvalidParamsError as exc:
        raise OverrideValidationError(f"invalid parameters after overrides: {exc}") from exc
