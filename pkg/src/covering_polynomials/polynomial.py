"""Exact integer polynomials in one indeterminate `q`.

A polynomial is stored as its coefficient tuple, index being the power of `q`, e.g.
`(1, 3, 1)` represents `1 + 3q + q^2`. Trailing zeros are never stored, so the zero
polynomial is the empty tuple.

>>> p = Polynomial((1, 1))
>>> str(p * p)
'1 + 2q + q^2'
>>> (p * p).evaluate(1)
4
"""

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Iterator


class NotDivisibleError(ValueError):
    """Raised when a polynomial is not divisible by `(q - 1)^2`."""


def normalise(coefficients: Iterable[int]) -> tuple[int, ...]:
    """Strip trailing zero coefficients.

    Args:
        coefficients:
            The coefficients, in ascending powers of `q`.

    Returns:
        The canonical coefficient tuple.
    """
    result = list(coefficients)
    while result and result[-1] == 0:
        result.pop()
    return tuple(result)


@dataclass(frozen=True)
class Polynomial:
    """A polynomial with integer coefficients in the indeterminate `q`.

    Attributes:
        coefficients:
            The coefficients in ascending powers of `q`, without trailing zeros.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(
            not isinstance(c, int) or isinstance(c, bool) for c in self.coefficients
        ):
            raise TypeError(f"Coefficients must be integers, got {self.coefficients}")
        object.__setattr__(self, "coefficients", normalise(self.coefficients))

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "Polynomial":
        """The polynomial `coefficient * q^power`."""
        if power < 0:
            raise ValueError(f"The power must be non-negative, got {power}")
        return cls((0,) * power + (coefficient,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Polynomial":
        """The generating function `sum_x q^{e(x)}` of a statistic `e`.

        Args:
            exponents:
                The value of the statistic on every element.

        Returns:
            The generating polynomial.
        """
        counts: list[int] = list()
        for exponent in exponents:
            if exponent >= len(counts):
                counts.extend([0] * (exponent + 1 - len(counts)))
            counts[exponent] += 1
        return cls(tuple(counts))

    @property
    def degree(self) -> int | None:
        """The degree, or None for the zero polynomial."""
        if not self.coefficients:
            return None
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, power: int) -> int:
        """The coefficient `[q^power]` of the polynomial."""
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        return Polynomial(
            tuple(
                a + b
                for a, b in zip_longest(
                    self.coefficients, other.coefficients, fillvalue=0
                )
            )
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Polynomial | int") -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def evaluate(self, x: int) -> int:
        """Evaluate the polynomial at an integer, using Horner's scheme."""
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __call__(self, x: int) -> int:
        return self.evaluate(x)

    def derivative_at_one(self) -> int:
        """The value `p'(1) = sum_i i * c_i`."""
        return sum(i * c for i, c in enumerate(self.coefficients))

    def divide_by_q_minus_one(self) -> "Polynomial":
        """Exact division by `q - 1`.

        Raises:
            NotDivisibleError:
                If `p(1) != 0`.
        """
        if self.is_zero():
            return Polynomial()

        # Synthetic division from the top coefficient down
        quotient = [0] * (len(self.coefficients) - 1)
        carry = 0
        for power in range(len(self.coefficients) - 1, 0, -1):
            carry += self.coefficients[power]
            quotient[power - 1] = carry
        remainder = carry + self.coefficients[0]
        if remainder != 0:
            raise NotDivisibleError(f"{self} is not divisible by (q - 1)")
        return Polynomial(tuple(quotient))

    def divide_by_q_minus_one_squared(self) -> "Polynomial":
        """Exact division by `(q - 1)^2`.

        Raises:
            NotDivisibleError:
                If `p(1) != 0` or `p'(1) != 0`.
        """
        try:
            return self.divide_by_q_minus_one().divide_by_q_minus_one()
        except NotDivisibleError:
            raise NotDivisibleError(
                f"{self} is not divisible by (q - 1)^2: p(1) = {self.evaluate(1)} and "
                f"p'(1) = {self.derivative_at_one()}"
            )

    def is_palindromic(self, degree: int) -> bool:
        """Whether `c_i = c_{d - i}` for all `0 <= i <= d`.

        Args:
            degree:
                The reflection degree `d`.

        Returns:
            Whether the coefficient sequence is symmetric about `d / 2`.
        """
        if self.degree is not None and self.degree > degree:
            return False
        return all(
            self.coefficient(i) == self.coefficient(degree - i)
            for i in range(degree + 1)
        )

    def __str__(self) -> str:
        return self.format()

    def format(self, latex: bool = False) -> str:
        """Human readable form, such as `1 + 3q + q^2`.

        Args:
            latex:
                Whether to emit exponents in LaTeX syntax and without spaces.

        Returns:
            The formatted polynomial.
        """
        if self.is_zero():
            return "0"
        terms: list[str] = list()
        for power, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if power == 0:
                monomial = ""
            elif power == 1:
                monomial = "q"
            elif latex:
                monomial = f"q^{{{power}}}"
            else:
                monomial = f"q^{power}"
            magnitude = abs(c)
            body = monomial if magnitude == 1 and monomial else f"{magnitude}{monomial}"
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign}{body}")

        text = terms[0].lstrip("+")
        separator = "" if latex else " "
        for term in terms[1:]:
            text += f"{separator}{term[0]}{separator}{term[1:]}"
        return text


def _coerce(value: "Polynomial | int") -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    raise TypeError(f"Cannot combine a polynomial with {type(value).__name__}")


# The polynomial `q`
Q = Polynomial((0, 1))
ONE = Polynomial((1,))
ZERO = Polynomial()


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def multiply(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def evaluate(p: Polynomial, x: int) -> int:
    return p.evaluate(x)


def derivative_at_one(p: Polynomial) -> int:
    return p.derivative_at_one()


def divide_by_q_minus_one_squared(p: Polynomial) -> Polynomial:
    return p.divide_by_q_minus_one_squared()


def is_palindromic(p: Polynomial, degree: int) -> bool:
    return p.is_palindromic(degree=degree)
