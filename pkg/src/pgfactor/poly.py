"""Exact integer-coefficient polynomials in a single indeterminate p.

Everything here is immutable and uses Python's arbitrary-precision ints,
so squared subgroup counts never overflow no matter the exponents.
"""

from __future__ import annotations

from typing import Iterable

NEG_INFINITY = float("-inf")


class InexactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder where none was expected."""


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial:
    """Dense polynomial over the integers; coeffs[i] is the coefficient of p^i.

    The zero polynomial stores an empty coefficient tuple, every other value
    keeps a nonzero leading coefficient.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self):
        """Degree of the polynomial; minus infinity for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @staticmethod
    def _coerce(value) -> "IntPolynomial | None":
        if isinstance(value, IntPolynomial):
            return value
        if isinstance(value, int):
            return IntPolynomial((value,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x: int) -> int:
        """Exact evaluation at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, den: "IntPolynomial") -> "IntPolynomial":
        """Divide by ``den`` over the integers, requiring a zero remainder.

        Raises InexactDivision if any quotient coefficient would be
        fractional or if a nonzero remainder survives.  Exact divisibility
        is a correctness property of the closed forms built on top of this,
        so failure here means a formula bug, not bad input.
        """
        if not isinstance(den, IntPolynomial):
            den = IntPolynomial._coerce(den)
        if den is None or not den:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return IntPolynomial(())
        if len(self.coeffs) < len(den.coeffs):
            raise InexactDivision(f"{self!r} is not divisible by {den!r}")
        rem = list(self.coeffs)
        lead = den.coeffs[-1]
        dn = len(den.coeffs)
        qn = len(rem) - dn + 1
        quot = [0] * qn
        for k in range(qn - 1, -1, -1):
            c = rem[k + dn - 1]
            if c % lead:
                raise InexactDivision(f"{self!r} is not divisible by {den!r}")
            q = c // lead
            quot[k] = q
            if q:
                for i, d in enumerate(den.coeffs):
                    rem[k + i] -= q * d
        if any(rem):
            raise InexactDivision(f"{self!r} is not divisible by {den!r}")
        return IntPolynomial(quot)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs!r})"


#: The indeterminate itself, for building formulas by plain arithmetic.
P = IntPolynomial((0, 1))


def render(poly: IntPolynomial) -> str:
    """Canonical text form: descending powers, no spaces, '^' exponents.

    Examples: ``9p^6+15p^5+2p+13``, ``p+3``, ``-2p^2-2``, ``0``.
    """
    if not poly:
        return "0"
    parts = []
    for k in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "p" if k == 1 else f"p^{k}"
            body = var if mag == 1 else f"{mag}{var}"
        parts.append(sign + body)
    return "".join(parts)
