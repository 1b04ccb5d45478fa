"""Sparse Laurent polynomials in one variable t with integer coefficients.

Coefficients are Python integers, so there is no overflow bound: products in
the torus knot quotient formula grow as large as they need to.
"""
import re
from types import MappingProxyType
from typing import (
    Any,
    Callable,
    Dict,
    Generator,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
    Union,
)

from lspace_knots.exceptions import NotDivisible, ParseError, ZeroPolynomial

TermsLike = Union[Mapping[int, int], Iterable[Tuple[int, int]]]

_TERM = re.compile(r"([+-])?(\d+)?(t(?:\^(-?\d+))?)?")


class LaurentPoly:
    """Immutable integer Laurent polynomial, exponent -> nonzero coefficient

    usable as a pydantic field type: validates from another LaurentPoly,
    an exponent -> coefficient mapping or the string rendering, eg.

    class Report(BaseModel):
        alexander: LaurentPoly

    Report(alexander="t - 1 + t^-1")
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[TermsLike] = None) -> None:
        collected: Dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for exponent, coefficient in items:
            collected[exponent] = collected.get(exponent, 0) + coefficient
        self._terms = {e: c for e, c in collected.items() if c != 0}

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @property
    def terms(self) -> Mapping[int, int]:
        """read only view of exponent -> coefficient"""
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[int, int]]:
        """(exponent, coefficient) pairs in descending exponent order"""
        return sorted(self._terms.items(), reverse=True)

    def exponents(self) -> List[int]:
        return sorted(self._terms, reverse=True)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __getitem__(self, exponent: int) -> int:
        return self.coefficient(exponent)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return add(self, other)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return add(self, -other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return mul(self, other)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for index, (exponent, coefficient) in enumerate(self.items()):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                variable = "t" if exponent == 1 else f"t^{exponent}"
                body = variable if magnitude == 1 else f"{magnitude}{variable}"
            if index == 0:
                parts.append(body if coefficient > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coefficient > 0 else '-'} {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """parse the rendering produced by str(), eg. "t^3 - t^2 + 1 - t^-2 + t^-3"

        :raises ParseError: with the offset of the first unreadable character
        """
        compact = "".join(text.split())
        if compact == "0":
            return cls()
        if not compact:
            raise ParseError("empty polynomial", 0)

        terms: List[Tuple[int, int]] = []
        position = 0
        while position < len(compact):
            match = _TERM.match(compact, position)
            sign, digits, variable, power = match.groups()  # type: ignore
            if digits is None and variable is None:
                raise ParseError(f"unexpected {compact[position]!r}", position)
            if sign is None and position > 0:
                raise ParseError("missing sign between terms", position)
            coefficient = int(digits) if digits is not None else 1
            if sign == "-":
                coefficient = -coefficient
            if variable is None:
                exponent = 0
            else:
                exponent = int(power) if power is not None else 1
            terms.append((exponent, coefficient))
            position = match.end()  # type: ignore
        return cls(terms)

    @classmethod
    def __get_validators__(
        cls,
    ) -> Generator[Callable[[Any], "LaurentPoly"], None, None]:
        yield cls.validate

    @classmethod
    def validate(cls, v: Any) -> "LaurentPoly":
        if isinstance(v, LaurentPoly):
            return v
        if isinstance(v, str):
            return cls.parse(v)
        if isinstance(v, Mapping):
            return cls({int(e): int(c) for e, c in v.items()})
        raise TypeError(f"can't build a LaurentPoly from {type(v).__name__}")

    @classmethod
    def __modify_schema__(cls, field_schema: dict) -> None:
        field_schema.update(type="string")
        field_schema.update(title="LaurentPoly")


ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """coefficientwise sum"""
    return LaurentPoly([*f.terms.items(), *g.terms.items()])


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """convolution product"""
    return LaurentPoly(
        (ef + eg, cf * cg)
        for ef, cf in f.terms.items()
        for eg, cg in g.terms.items()
    )


def substitute_power(f: LaurentPoly, p: int) -> LaurentPoly:
    """t -> t^p, p >= 1"""
    if p < 1:
        raise ValueError(f"substitute_power needs p >= 1, {p} was given")
    return LaurentPoly({p * e: c for e, c in f.terms.items()})


def mirror(f: LaurentPoly) -> LaurentPoly:
    """t -> t^-1"""
    return LaurentPoly({-e: c for e, c in f.terms.items()})


def shift(f: LaurentPoly, k: int) -> LaurentPoly:
    """multiply by t^k"""
    return LaurentPoly({e + k: c for e, c in f.terms.items()})


def degree(f: LaurentPoly) -> int:
    """largest exponent with a nonzero coefficient"""
    if f.is_zero():
        raise ZeroPolynomial("degree of the zero polynomial is undefined")
    return max(f.terms)


def valuation(f: LaurentPoly) -> int:
    """smallest exponent with a nonzero coefficient"""
    if f.is_zero():
        raise ZeroPolynomial("valuation of the zero polynomial is undefined")
    return min(f.terms)


def is_symmetric(f: LaurentPoly) -> bool:
    return f == mirror(f)


def abs_coefficient_sum(f: LaurentPoly) -> int:
    return sum(abs(c) for c in f.terms.values())


def evaluate_at_one(f: LaurentPoly) -> int:
    return sum(f.terms.values())


def divide_exact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """quotient q with q * g == f, by long division from the top exponent

    :raises ZeroPolynomial: g is zero
    :raises NotDivisible: g does not divide f
    """
    if g.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")

    g_top, g_bottom = degree(g), valuation(g)
    g_lead = g[g_top]
    remainder: Dict[int, int] = dict(f.terms)
    quotient: Dict[int, int] = {}

    while remainder:
        top, bottom = max(remainder), min(remainder)
        if top - bottom < g_top - g_bottom or remainder[top] % g_lead:
            raise NotDivisible(f"{g} does not divide {f}")
        factor = remainder[top] // g_lead
        offset = top - g_top
        quotient[offset] = factor
        for e, c in g.terms.items():
            value = remainder.get(e + offset, 0) - factor * c
            if value:
                remainder[e + offset] = value
            else:
                remainder.pop(e + offset, None)

    return LaurentPoly(quotient)
