from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Tuple,
    Union,
)

from ..exceptions import InvalidArgumentError
from .scalar import ONE, Scalar
from .types import Depth, RationalLike

Accumulator = Dict["Monomial", Dict[int, Fraction]]


class Generator(str, Enum):
    P = "P"
    PZ = "Pz"
    E4 = "E4"
    E1 = "E1"
    E2 = "E2"

    @property
    def weight(self) -> int:
        mapping = {
            Generator.P: 2,
            Generator.PZ: 3,
            Generator.E4: 4,
            Generator.E1: 1,
            Generator.E2: 2,
        }
        return mapping[self]

    @property
    def index(self) -> int:
        return GENERATORS.index(self)

    @classmethod
    def validate(cls, value: str) -> "Generator":
        try:
            return cls(value)
        except ValueError as exc:
            raise InvalidArgumentError(f"'{value}' is not a generator name.") from exc


GENERATORS: Tuple[Generator, ...] = tuple(Generator)
GENERATOR_WEIGHTS: Tuple[int, ...] = (2, 3, 4, 1, 2)


class Monomial(NamedTuple):
    """P^p Pz^pz E4^e4 E1^e1 E2^e2."""

    p: int = 0
    pz: int = 0
    e4: int = 0
    e1: int = 0
    e2: int = 0

    @classmethod
    def of(cls, generator: Generator, power: int = 1) -> "Monomial":
        exponents = [0] * 5
        exponents[generator.index] = power
        return cls(*exponents)

    @property
    def weight(self) -> int:
        return 2 * self.p + 3 * self.pz + 4 * self.e4 + self.e1 + 2 * self.e2

    @property
    def depth(self) -> Depth:
        return (self.e2, self.e1)

    @property
    def is_constant(self) -> bool:
        return not any(self)

    @property
    def sort_key(self) -> Tuple[int, "Monomial"]:
        return (self.weight, self)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(*(x + y for x, y in zip(self, other)))

    def lowered(self, index: int) -> "Monomial":
        exponents = list(self)
        exponents[index] -= 1
        return Monomial(*exponents)

    def to_text(self) -> str:
        factors = []
        for generator, exponent in zip(GENERATORS, self):
            if exponent == 1:
                factors.append(generator.value)
            elif exponent > 1:
                factors.append(f"{generator.value}^{exponent}")
        return "*".join(factors)


UNIT = Monomial()


def accumulate_term(
    acc: Accumulator, monomial: Monomial, scalar: Scalar, factor: Scalar = ONE
) -> None:
    slot = acc.setdefault(monomial, {})
    for e1, v1 in scalar.terms:
        for e2, v2 in factor.terms:
            key = e1 + e2
            slot[key] = slot.get(key, Fraction(0)) + v1 * v2


class Form:
    """Sparse polynomial in P, Pz, E4, E1, E2 over Q[c, 1/c].

    Terms are stored in descending graded-lexicographic order with no zero
    coefficient, so equality is comparison of the stored tuples.
    """

    __slots__ = ("_terms", "_index", "_hash")

    def __init__(self, terms: Iterable[Tuple[Monomial, Scalar]] = ()) -> None:
        cleaned = [(m, s) for m, s in terms if not s.is_zero]
        cleaned.sort(key=lambda item: item[0].sort_key, reverse=True)
        self._terms: Tuple[Tuple[Monomial, Scalar], ...] = tuple(cleaned)
        self._index: Optional[Dict[Monomial, Scalar]] = None
        self._hash: Optional[int] = None

    @classmethod
    def from_accumulator(cls, acc: Accumulator) -> "Form":
        return cls(
            (monomial, Scalar.from_mapping(coefficients))
            for monomial, coefficients in acc.items()
        )

    @classmethod
    def from_terms(cls, mapping: Mapping[Monomial, Scalar]) -> "Form":
        acc: Accumulator = {}
        for monomial, scalar in mapping.items():
            accumulate_term(acc, monomial, scalar)
        return cls.from_accumulator(acc)

    @classmethod
    def zero(cls) -> "Form":
        return cls()

    @classmethod
    def constant(cls, value: Union[Scalar, RationalLike]) -> "Form":
        return cls([(UNIT, Scalar.coerce(value))])

    @classmethod
    def generator(cls, generator: Generator) -> "Form":
        return cls([(Monomial.of(generator), ONE)])

    @classmethod
    def monomial(
        cls, monomial: Monomial, value: Union[Scalar, RationalLike] = 1
    ) -> "Form":
        return cls([(monomial, Scalar.coerce(value))])

    @classmethod
    def linear_combination(
        cls, items: Iterable[Tuple[Union[Scalar, RationalLike], "Form"]]
    ) -> "Form":
        acc: Accumulator = {}
        for coefficient, form in items:
            factor = Scalar.coerce(coefficient)
            if factor.is_zero:
                continue
            for monomial, scalar in form._terms:
                accumulate_term(acc, monomial, scalar, factor)
        return cls.from_accumulator(acc)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Tuple[Tuple[Monomial, Scalar], ...]:
        return self._terms

    def monomials(self) -> List[Monomial]:
        return [monomial for monomial, _ in self._terms]

    def coefficient(self, monomial: Monomial) -> Scalar:
        if self._index is None:
            self._index = dict(self._terms)
        return self._index.get(monomial, Scalar())

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Form):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, Scalar)):
            return self._terms == Form.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other: Union["Form", Scalar, RationalLike]) -> "Form":
        return Form.linear_combination([(1, self), (1, _as_form(other))])

    __radd__ = __add__

    def __sub__(self, other: Union["Form", Scalar, RationalLike]) -> "Form":
        return Form.linear_combination([(1, self), (-1, _as_form(other))])

    def __rsub__(self, other: Union[Scalar, RationalLike]) -> "Form":
        return Form.linear_combination([(1, _as_form(other)), (-1, self)])

    def __neg__(self) -> "Form":
        return Form((monomial, -scalar) for monomial, scalar in self._terms)

    def __mul__(self, other: Union["Form", Scalar, RationalLike]) -> "Form":
        if not isinstance(other, Form):
            return self.scaled(Scalar.coerce(other))
        acc: Accumulator = {}
        for m1, s1 in self._terms:
            for m2, s2 in other._terms:
                accumulate_term(acc, m1.times(m2), s1, s2)
        return Form.from_accumulator(acc)

    def __rmul__(self, other: Union[Scalar, RationalLike]) -> "Form":
        return self.scaled(Scalar.coerce(other))

    def __pow__(self, exponent: int) -> "Form":
        if exponent < 0:
            if len(self._terms) != 1 or not self._terms[0][0].is_constant:
                raise ValueError("only a constant c-power can be raised to a negative power")
            return Form.constant(self._terms[0][1] ** exponent)
        result = Form.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scaled(self, factor: Scalar) -> "Form":
        if factor.is_zero:
            return Form()
        return Form((monomial, scalar * factor) for monomial, scalar in self._terms)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[Tuple[bool, str]] = []
        for monomial, scalar in self._terms:
            mono = monomial.to_text()
            if scalar.is_single_term:
                text = scalar.to_text()
                negative = text.startswith("-")
                body = text[1:] if negative else text
                if mono:
                    body = mono if body == "1" else f"{body}*{mono}"
            else:
                negative = False
                body = f"({scalar.to_text()})" + (f"*{mono}" if mono else "")
            pieces.append((negative, body))
        first_negative, first_body = pieces[0]
        text = f"-{first_body}" if first_negative else first_body
        for negative, body in pieces[1:]:
            text += f" - {body}" if negative else f" + {body}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Form({self.to_text()!r})"


def _as_form(value: Union[Form, Scalar, RationalLike]) -> Form:
    if isinstance(value, Form):
        return value
    return Form.constant(value)


P = Form.generator(Generator.P)
PZ = Form.generator(Generator.PZ)
E4 = Form.generator(Generator.E4)
E1 = Form.generator(Generator.E1)
E2 = Form.generator(Generator.E2)
