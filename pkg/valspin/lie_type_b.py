"""Representation theory of so(2m+1) at the level of characters.

Weights are handled in doubled coordinates throughout, matching
:mod:`valspin.laurent`: the highest weight [3/2, 1/2, 1/2] is stored as
``(3, 1, 1)``. Irreducible characters come from Weyl's character formula,
exterior powers from the Adams recurrence, and characters are split into
irreducibles by repeatedly peeling off the leading term.
"""

from __future__ import annotations

import functools
import itertools
import logging
import re
import threading
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Any

import sympy as sp

from valspin.laurent import (
    Exponent,
    InexactDivisionError,
    LaurentPolynomial,
    exact_divide,
    format_half,
    leibniz_determinant,
)
from valspin.ports import AbstractRepresentation

logger = logging.getLogger(__name__)

__all__ = [
    "NotACharacterError",
    "HighestWeight",
    "BaseRepresentation",
    "Decomposition",
    "is_dominant_exponent",
    "fundamental_weight",
    "weyl_denominator",
    "weyl_numerator",
    "weyl_character",
    "weyl_dim",
    "weight_multiplicity",
    "base_character",
    "ExteriorPowerTower",
    "exterior_power_char",
    "decompose",
    "IrreducibleRepresentation",
    "DirectSum",
    "ExteriorPower",
    "named_representation",
]

_ENTRY_PATTERN = re.compile(r"^\s*(\d+)\s*(?:/\s*2\s*)?$")


class NotACharacterError(ValueError):
    """Raised when a polynomial cannot be the character of a representation."""


def is_dominant_exponent(exponent: Sequence[int]) -> bool:
    """True if a doubled exponent vector is a dominant weight of type B.

    Dominant means non-negative, weakly decreasing, and all entries integers
    or all half-integers (all doubled entries of one parity).
    """
    if not exponent or exponent[-1] < 0:
        return False
    if any(a < b for a, b in zip(exponent, exponent[1:])):
        return False
    return len({x % 2 for x in exponent}) == 1


@dataclass(frozen=True)
class HighestWeight:
    """Dominant weight [λ_1, ..., λ_m] of so(2m+1), stored doubled.

    Attributes:
        doubled: The entries 2λ_1 >= ... >= 2λ_m >= 0, all even or all odd.
    """

    doubled: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate dominance and parity."""
        object.__setattr__(self, "doubled", tuple(int(x) for x in self.doubled))
        if not self.doubled:
            raise ValueError("A highest weight needs at least one entry")
        if not is_dominant_exponent(self.doubled):
            raise ValueError(
                f"{self} is not dominant: entries must be non-negative, weakly "
                f"decreasing and all integers or all half-integers"
            )

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> HighestWeight:
        """Parse a comma-separated weight such as ``"3/2,1/2,1/2"``.

        Each entry is a non-negative integer ``p`` or a half ``p/2``; brackets
        are optional.

        Raises:
            ValueError: If the text is malformed, the rank does not match, or
                the weight is not dominant.
        """
        body = text.strip().removeprefix("[").removesuffix("]")
        if not body.strip():
            raise ValueError(f"Empty weight string {text!r}")
        doubled = []
        for entry in body.split(","):
            match = _ENTRY_PATTERN.match(entry)
            if match is None:
                raise ValueError(
                    f"Invalid weight entry {entry.strip()!r} in {text!r} "
                    f"(expected 'p' or 'p/2')"
                )
            value = int(match.group(1))
            doubled.append(value if "/" in entry else 2 * value)
        if rank is not None and len(doubled) != rank:
            raise ValueError(
                f"Weight {text!r} has {len(doubled)} entries, expected {rank}"
            )
        return cls(tuple(doubled))

    @classmethod
    def from_fractions(cls, values: Iterable[int | str | sp.Rational]) -> HighestWeight:
        """Build a weight from exact values such as ``[sp.Rational(3, 2), 1, "1/2"]``.

        Raises:
            ValueError: If a value is not an integer or a half-integer.
        """
        doubled = []
        for value in values:
            twice = 2 * sp.Rational(value)
            if not twice.is_integer:
                raise ValueError(f"Weight entry {value} is not a multiple of 1/2")
            doubled.append(int(twice))
        return cls(tuple(doubled))

    @classmethod
    def zero(cls, rank: int) -> HighestWeight:
        """Highest weight of the trivial representation."""
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        """Rank m."""
        return len(self.doubled)

    @property
    def is_integral(self) -> bool:
        """True for integer weights, False for half-integer (spinorial) ones."""
        return self.doubled[0] % 2 == 0

    def entries(self) -> list[str]:
        """Exact string entries, e.g. ``["3/2", "1/2", "1/2"]``."""
        return [format_half(x) for x in self.doubled]

    def rho_shifted(self) -> tuple[int, ...]:
        """Doubled entries of λ + ρ, i.e. 2λ_i + 2(m - i) + 1 for i = 1..m."""
        m = self.rank
        return tuple(d + 2 * (m - i) + 1 for i, d in enumerate(self.doubled, start=1))

    def to_dict(self) -> dict[str, Any]:
        """Serializable form."""
        return {"weight": self.entries()}

    def __str__(self) -> str:
        return "[" + ",".join(self.entries()) + "]"

    def __repr__(self) -> str:
        return f"HighestWeight({self})"


class BaseRepresentation(Enum):
    """The two representations every computation starts from."""

    STANDARD = "standard"
    SPIN = "spin"


def fundamental_weight(rank: int, i: int) -> HighestWeight:
    """Highest weight of the i-th fundamental representation, 1 <= i <= m.

    For i < m this is Λ^i of the standard representation, [1,...,1,0,...,0];
    for i = m it is the spin representation [1/2,...,1/2].
    """
    if not 1 <= i <= rank:
        raise ValueError(f"Fundamental weight index must be in 1..{rank}, got {i}")
    if i == rank:
        return HighestWeight((1,) * rank)
    return HighestWeight((2,) * i + (0,) * (rank - i))


def _alternant(rank: int, doubled_shift: Sequence[int]) -> LaurentPolynomial:
    # det( x_j^{l_i} - x_j^{-l_i} ) with l_i given doubled
    matrix = []
    for shift in doubled_shift:
        row = []
        for j in range(rank):
            plus = [0] * rank
            minus = [0] * rank
            plus[j] = shift
            minus[j] = -shift
            row.append(LaurentPolynomial(rank, {tuple(plus): 1, tuple(minus): -1}))
        matrix.append(row)
    return leibniz_determinant(matrix)


@functools.lru_cache(maxsize=None)
def weyl_denominator(rank: int) -> LaurentPolynomial:
    """Weyl denominator |x_j^{m-i+1/2} - x_j^{-(m-i+1/2)}| of so(2m+1)."""
    return _alternant(rank, HighestWeight.zero(rank).rho_shifted())


def weyl_numerator(rank: int, lam: HighestWeight) -> LaurentPolynomial:
    """Weyl numerator |x_j^{λ_i+m-i+1/2} - x_j^{-(λ_i+m-i+1/2)}|."""
    _check_weight_rank(rank, lam)
    return _alternant(rank, lam.rho_shifted())


def _check_weight_rank(rank: int, lam: HighestWeight) -> None:
    if lam.rank != rank:
        raise ValueError(f"Weight {lam} has rank {lam.rank}, expected {rank}")


@functools.lru_cache(maxsize=None)
def weyl_character(rank: int, lam: HighestWeight) -> LaurentPolynomial:
    """Character of the irreducible representation Γ_λ of so(2m+1).

    Computed as the quotient of the two Weyl alternants; the quotient is
    always exact, so a division failure is an internal error.
    """
    _check_weight_rank(rank, lam)
    try:
        character = exact_divide(weyl_numerator(rank, lam), weyl_denominator(rank))
    except InexactDivisionError as exc:
        raise RuntimeError(f"Weyl quotient for {lam} is not exact: {exc}") from exc
    logger.debug(
        "[Weyl] Char(Γ%s) computed: %d terms, dim %d",
        lam, len(character), character.evaluate_at_one(),
    )
    return character


def weyl_dim(rank: int, lam: HighestWeight) -> int:
    """Dimension of Γ_λ by the Weyl dimension formula for type B.

    dim = Π_{i<j} (l_i² - l_j²)/(r_i² - r_j²) · Π_i l_i/r_i with l = λ + ρ
    and r = ρ; doubled coordinates give the same ratios.
    """
    _check_weight_rank(rank, lam)
    shifted = lam.rho_shifted()
    rho = HighestWeight.zero(rank).rho_shifted()
    result = sp.Integer(1)
    for i, j in itertools.combinations(range(rank), 2):
        result *= sp.Rational(shifted[i] ** 2 - shifted[j] ** 2, rho[i] ** 2 - rho[j] ** 2)
    for li, ri in zip(shifted, rho):
        result *= sp.Rational(li, ri)
    if not result.is_integer:
        raise RuntimeError(f"Weyl dimension of {lam} is not integral: {result}")
    return int(result)


def weight_multiplicity(rank: int, lam: HighestWeight, mu: Sequence[int]) -> int:
    """Multiplicity of the (doubled) weight ``mu`` in Γ_λ."""
    return weyl_character(rank, lam).coefficient(mu)


@functools.lru_cache(maxsize=None)
def base_character(rank: int, which: BaseRepresentation | str) -> LaurentPolynomial:
    """Character of the standard or the spin representation of so(2m+1).

    standard: Σ_j (x_j + x_j^{-1}) + 1
    spin: Σ over all sign patterns of Π_j x_j^{±1/2}
    """
    which = BaseRepresentation(which)
    if which is BaseRepresentation.STANDARD:
        terms: dict[Exponent, int] = {(0,) * rank: 1}
        for j in range(rank):
            for sign in (2, -2):
                exponent = [0] * rank
                exponent[j] = sign
                terms[tuple(exponent)] = 1
        return LaurentPolynomial(rank, terms)
    return LaurentPolynomial(
        rank, {signs: 1 for signs in itertools.product((1, -1), repeat=rank)}
    )


class ExteriorPowerTower:
    """Characters Λ^0 V, Λ^1 V, ... of one representation V, built bottom-up.

    Λ^d V = (1/d) Σ_{k=1..d} (-1)^{k-1} ψ^k(Char V) · Λ^{d-k} V
    """

    def __init__(self, base: LaurentPolynomial) -> None:
        self._base = base
        self._powers = [LaurentPolynomial.one(base.rank), base]
        self._adams = [LaurentPolynomial.one(base.rank), base]
        self._lock = threading.Lock()

    @property
    def base(self) -> LaurentPolynomial:
        """The character of V."""
        return self._base

    def _adams_power(self, k: int) -> LaurentPolynomial:
        while len(self._adams) <= k:
            self._adams.append(self._base.adams(len(self._adams)))
        return self._adams[k]

    def _extend(self) -> None:
        d = len(self._powers)
        total = LaurentPolynomial.zero(self._base.rank)
        for k in range(1, d + 1):
            term = self._adams_power(k) * self._powers[d - k]
            total = total + term if k % 2 == 1 else total - term
        quotient = {}
        for exponent, coeff in total.items():
            value, rest = divmod(coeff, d)
            if rest:
                raise InexactDivisionError(
                    f"Adams recurrence for Λ^{d}: coefficient {coeff} of "
                    f"x^{exponent} is not divisible by {d}; the input is not the "
                    f"character of a representation"
                )
            quotient[exponent] = value
        self._powers.append(LaurentPolynomial(self._base.rank, quotient))
        logger.debug("[Adams] Λ^%d computed: %d terms", d, len(quotient))

    def power(self, d: int) -> LaurentPolynomial:
        """Character of Λ^d V.

        Raises:
            ValueError: If ``d`` is negative.
            InexactDivisionError: If the base is not a genuine character.
        """
        if d < 0:
            raise ValueError(f"Exterior degree must be non-negative, got {d}")
        with self._lock:
            while len(self._powers) <= d:
                self._extend()
            return self._powers[d]


_towers: dict[LaurentPolynomial, ExteriorPowerTower] = {}
_towers_lock = threading.Lock()


def exterior_power_char(c: LaurentPolynomial, d: int) -> LaurentPolynomial:
    """Character of Λ^d of the representation with character ``c``.

    All lower degrees are cached per base character.
    """
    with _towers_lock:
        tower = _towers.get(c)
        if tower is None:
            tower = _towers[c] = ExteriorPowerTower(c)
    return tower.power(d)


class Decomposition:
    """Direct sum ⊕ n_λ Γ_λ of irreducible representations of so(2m+1).

    Summands are kept in lexicographically decreasing order of the highest
    weight, the order in which the peel-off algorithm finds them.
    """

    __slots__ = ("_rank", "_parts")

    def __init__(
        self,
        rank: int,
        parts: Mapping[HighestWeight, int] | Iterable[tuple[HighestWeight, int]] = (),
    ) -> None:
        """Create a decomposition.

        Raises:
            ValueError: If a weight has the wrong rank or a multiplicity is negative.
        """
        pairs = parts.items() if isinstance(parts, Mapping) else parts
        merged: dict[HighestWeight, int] = {}
        for weight, mult in pairs:
            _check_weight_rank(rank, weight)
            if mult < 0:
                raise ValueError(f"Multiplicity of {weight} must be non-negative, got {mult}")
            if mult:
                merged[weight] = merged.get(weight, 0) + mult
        self._rank = rank
        self._parts = dict(sorted(merged.items(), key=lambda item: item[0].doubled, reverse=True))

    @property
    def rank(self) -> int:
        """Rank m."""
        return self._rank

    def multiplicity(self, weight: HighestWeight) -> int:
        """n_λ for the given highest weight (0 if absent)."""
        return self._parts.get(weight, 0)

    def items(self) -> list[tuple[HighestWeight, int]]:
        """(weight, multiplicity) pairs, highest weight first."""
        return list(self._parts.items())

    def weights(self) -> list[HighestWeight]:
        """Highest weights that occur."""
        return list(self._parts)

    def __iter__(self) -> Iterator[tuple[HighestWeight, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._parts)

    def __contains__(self, weight: object) -> bool:
        return weight in self._parts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self._rank == other._rank and self._parts == other._parts

    def __hash__(self) -> int:
        return hash((self._rank, frozenset(self._parts.items())))

    def dimension(self) -> int:
        """Σ n_λ · dim Γ_λ."""
        return sum(mult * weyl_dim(self._rank, weight) for weight, mult in self._parts.items())

    def character(self) -> LaurentPolynomial:
        """Recombined character Σ n_λ · Char(Γ_λ)."""
        total = LaurentPolynomial.zero(self._rank)
        for weight, mult in self._parts.items():
            total = total + weyl_character(self._rank, weight).scale(mult)
        return total

    def to_list(self) -> list[dict[str, Any]]:
        """Serializable summand list, highest weight first."""
        return [{"weight": w.entries(), "mult": n} for w, n in self._parts.items()]

    def __str__(self) -> str:
        if not self._parts:
            return "0"
        return " ⊕ ".join(
            f"Γ{w}" if n == 1 else f"{n}Γ{w}" for w, n in self._parts.items()
        )

    def __repr__(self) -> str:
        return f"Decomposition(rank={self._rank}, summands={len(self._parts)})"


def decompose(c: LaurentPolynomial, rank: int) -> Decomposition:
    """Split a character into irreducible characters.

    a) take the leading term n_λ x^λ; b) compute Char(Γ_λ);
    c) subtract n_λ Char(Γ_λ); d) repeat until nothing is left.

    Raises:
        ValueError: If the character has a different rank.
        NotACharacterError: If a leading exponent is not dominant or a leading
            coefficient is not positive.
    """
    if c.rank != rank:
        raise ValueError(f"Character has rank {c.rank}, expected {rank}")
    remainder = c
    parts: dict[HighestWeight, int] = {}
    previous: Exponent | None = None
    while not remainder.is_zero():
        exponent, coeff = remainder.leading_term()  # type: ignore[misc]
        if previous is not None and exponent >= previous:
            raise NotACharacterError(
                f"Leading exponent {exponent} did not decrease below {previous}"
            )
        if not is_dominant_exponent(exponent):
            raise NotACharacterError(
                f"Leading exponent [{','.join(format_half(x) for x in exponent)}] "
                f"is not a dominant weight"
            )
        if coeff <= 0:
            raise NotACharacterError(
                f"Leading coefficient {coeff} at "
                f"[{','.join(format_half(x) for x in exponent)}] is not positive"
            )
        weight = HighestWeight(exponent)
        parts[weight] = coeff
        logger.debug("[Decompose] Peeled %d × Γ%s", coeff, weight)
        remainder = remainder - weyl_character(rank, weight).scale(coeff)
        previous = exponent
    return Decomposition(rank, parts)


class IrreducibleRepresentation(AbstractRepresentation):
    """The irreducible representation Γ_λ."""

    def __init__(self, weight: HighestWeight) -> None:
        self._weight = weight

    @property
    def weight(self) -> HighestWeight:
        """Highest weight λ."""
        return self._weight

    @property
    def rank(self) -> int:
        return self._weight.rank

    @property
    def label(self) -> str:
        return f"Γ{self._weight}"

    def character(self) -> LaurentPolynomial:
        return weyl_character(self.rank, self._weight)

    def dimension(self) -> int:
        return weyl_dim(self.rank, self._weight)

    def decompose(self) -> Decomposition:
        return Decomposition(self.rank, {self._weight: 1})


class DirectSum(AbstractRepresentation):
    """Direct sum of representations of the same rank."""

    def __init__(self, summands: Sequence[AbstractRepresentation]) -> None:
        if not summands:
            raise ValueError("A direct sum needs at least one summand")
        ranks = {s.rank for s in summands}
        if len(ranks) != 1:
            raise ValueError(f"Summands have different ranks: {sorted(ranks)}")
        self._summands = tuple(summands)

    @property
    def rank(self) -> int:
        return self._summands[0].rank

    @property
    def label(self) -> str:
        return " ⊕ ".join(s.label for s in self._summands)

    def character(self) -> LaurentPolynomial:
        total = LaurentPolynomial.zero(self.rank)
        for summand in self._summands:
            total = total + summand.character()
        return total

    def decompose(self) -> Decomposition:
        return decompose(self.character(), self.rank)


class ExteriorPower(AbstractRepresentation):
    """Λ^d of a representation, via the Adams recurrence."""

    def __init__(self, base: AbstractRepresentation, degree: int) -> None:
        if degree < 0:
            raise ValueError(f"Exterior degree must be non-negative, got {degree}")
        self._base = base
        self._degree = degree

    @property
    def degree(self) -> int:
        """The exterior degree d."""
        return self._degree

    @property
    def rank(self) -> int:
        return self._base.rank

    @property
    def label(self) -> str:
        return f"Λ^{self._degree}({self._base.label})"

    def character(self) -> LaurentPolynomial:
        return exterior_power_char(self._base.character(), self._degree)

    def decompose(self) -> Decomposition:
        return decompose(self.character(), self.rank)


def named_representation(rank: int, name: str) -> AbstractRepresentation:
    """Look up ``"standard"``, ``"spin"`` or ``"sum"`` (standard ⊕ spin).

    The rank-3 ``"sum"`` is O' ⊕ O, the tangent representation of Spin(7)
    at a point of the unit sphere in O².
    """
    standard = IrreducibleRepresentation(HighestWeight((2,) + (0,) * (rank - 1)))
    spin = IrreducibleRepresentation(fundamental_weight(rank, rank))
    table: dict[str, AbstractRepresentation] = {
        BaseRepresentation.STANDARD.value: standard,
        BaseRepresentation.SPIN.value: spin,
        "sum": DirectSum([standard, spin]),
    }
    try:
        return table[name]
    except KeyError:
        raise ValueError(
            f"Unknown representation {name!r}; choose from {sorted(table)}"
        ) from None
