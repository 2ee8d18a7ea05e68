"""Isomorphism types of finite abelian p-groups of rank at most 3.

A type is the descending exponent triple (e1, e2, e3) of
Z_{p^e1} x Z_{p^e2} x Z_{p^e3}; smaller ranks are padded with zeros, so
(2, 0, 0) is the cyclic group of order p^2.
"""

from __future__ import annotations

from dataclasses import dataclass


class NegativeExponent(ValueError):
    """A type exponent was negative."""


@dataclass(frozen=True, order=True)
class GroupType:
    exponents: tuple[int, int, int]

    def __post_init__(self):
        e = self.exponents
        if len(e) != 3 or not all(isinstance(x, int) for x in e):
            raise ValueError(f"expected exactly 3 integer exponents, got {e!r}")
        if min(e) < 0:
            raise NegativeExponent(f"negative exponent in {e!r}")
        if not (e[0] >= e[1] >= e[2]):
            raise ValueError(f"exponents must be descending, got {e!r}")

    def __iter__(self):
        return iter(self.exponents)

    def __getitem__(self, i: int) -> int:
        return self.exponents[i]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.exponents if x > 0)

    @property
    def is_elementary_abelian(self) -> bool:
        return self.exponents[0] <= 1

    def order(self, p: int) -> int:
        return p ** sum(self.exponents)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.exponents)


def normalize(raw) -> GroupType:
    """Sort a 3-entry exponent sequence descending into a GroupType.

    Formula arguments arise as unordered triples, so this is the one entry
    point that turns them into a canonical type.  Negative entries are
    rejected; the zero-on-negative convention lives in the formulas module.
    """
    entries = [int(x) for x in raw]
    if len(entries) != 3:
        raise ValueError(f"expected exactly 3 exponents, got {len(entries)}")
    if min(entries) < 0:
        raise NegativeExponent(f"negative exponent in {entries!r}")
    return GroupType(tuple(sorted(entries, reverse=True)))


def parse_type(text: str) -> GroupType:
    """Parse the CLI text form 'e1,e2,e3'; the input must already be descending."""
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse group type {text!r}") from None
    if len(entries) != 3:
        raise ValueError(f"group type needs exactly 3 comma-separated exponents: {text!r}")
    return GroupType(entries)
