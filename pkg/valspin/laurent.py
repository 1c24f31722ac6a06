"""Exact sparse Laurent polynomials with half-integer exponents.

A polynomial in ``x_1, ..., x_m`` is stored as a mapping from exponent vectors
to integer coefficients. Exponents are stored doubled, so ``x_1^(1/2)`` has the
exponent vector ``(1, 0, ..., 0)`` and ``x_1`` has ``(2, 0, ..., 0)``. Python
integers carry the coefficients, so all arithmetic is exact.

Exponent vectors are compared lexicographically with the first variable most
significant; this is the order used to pick leading terms.
"""

from __future__ import annotations

import heapq
import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from typing import Any

from sympy.combinatorics import Permutation

logger = logging.getLogger(__name__)

__all__ = [
    "Exponent",
    "RankMismatchError",
    "InexactDivisionError",
    "LaurentPolynomial",
    "add",
    "mul",
    "adams_substitute",
    "leading_term",
    "exact_divide",
    "evaluate_at_one",
    "leibniz_determinant",
    "format_half",
]

Exponent = tuple[int, ...]


class RankMismatchError(ValueError):
    """Raised when two polynomials in different numbers of variables meet."""


class InexactDivisionError(ValueError):
    """Raised when a division that must be exact leaves a remainder."""


def format_half(doubled: int) -> str:
    """Render a doubled exponent as an exact string: 3 -> "3/2", 4 -> "2"."""
    if doubled % 2 == 0:
        return str(doubled // 2)
    return f"{doubled}/2"


def _check_exponent(exponent: Sequence[int], rank: int) -> Exponent:
    if len(exponent) != rank:
        raise RankMismatchError(
            f"Exponent vector {tuple(exponent)} has length {len(exponent)}, "
            f"expected {rank}"
        )
    return tuple(int(e) for e in exponent)


class LaurentPolynomial:
    """Immutable element of Z[x_1^(±1/2), ..., x_m^(±1/2)].

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term mappings are equal.
    """

    __slots__ = ("_rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Sequence[int], int] | None = None) -> None:
        """Create a polynomial from a mapping of doubled exponents to coefficients.

        Args:
            rank: Number of variables m.
            terms: Mapping from exponent vectors (length m) to integer
                coefficients. Zero coefficients are dropped.

        Raises:
            ValueError: If rank is not positive or a coefficient is not integral.
            RankMismatchError: If an exponent vector has the wrong length.
        """
        if rank <= 0:
            raise ValueError(f"Rank must be positive, got {rank}")
        cleaned: dict[Exponent, int] = {}
        for exponent, coeff in (terms or {}).items():
            if not isinstance(coeff, int):
                raise ValueError(f"Coefficient {coeff!r} is not an integer")
            key = _check_exponent(exponent, rank)
            total = cleaned.get(key, 0) + coeff
            if total:
                cleaned[key] = total
            else:
                cleaned.pop(key, None)
        self._rank = rank
        self._terms = cleaned
        self._hash: int | None = None

    @classmethod
    def _from_clean(cls, rank: int, terms: dict[Exponent, int]) -> LaurentPolynomial:
        # Internal constructor for dictionaries that are already canonical.
        poly = cls.__new__(cls)
        poly._rank = rank
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, rank: int) -> LaurentPolynomial:
        """The zero polynomial in ``rank`` variables."""
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> LaurentPolynomial:
        """The constant polynomial 1."""
        return cls.constant(rank, 1)

    @classmethod
    def constant(cls, rank: int, value: int) -> LaurentPolynomial:
        """The constant polynomial ``value``."""
        return cls(rank, {(0,) * rank: value})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> LaurentPolynomial:
        """A single term ``coeff * x^exponent`` (exponent given doubled)."""
        return cls(len(exponent), {tuple(exponent): coeff})

    @property
    def rank(self) -> int:
        """Number of variables."""
        return self._rank

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.terms())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> Iterable[tuple[Exponent, int]]:
        """Unordered view of (exponent, coefficient) pairs."""
        return self._terms.items()

    def terms(self) -> list[tuple[Exponent, int]]:
        """Terms sorted with the leading (lexicographically largest) first."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exponent: Sequence[int]) -> int:
        """Coefficient of ``x^exponent`` (0 if absent)."""
        return self._terms.get(tuple(exponent), 0)

    def _check_rank(self, other: LaurentPolynomial) -> None:
        if self._rank != other._rank:
            raise RankMismatchError(
                f"Cannot combine polynomials of rank {self._rank} and {other._rank}"
            )

    def _coerce(self, other: Any) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            self._check_rank(other)
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self._rank, other)
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._rank == other._rank and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._rank, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other: Any) -> LaurentPolynomial:
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        if len(other_poly._terms) > len(self._terms):
            big, small = other_poly._terms, self._terms
        else:
            big, small = self._terms, other_poly._terms
        result = dict(big)
        for exponent, coeff in small.items():
            total = result.get(exponent, 0) + coeff
            if total:
                result[exponent] = total
            else:
                del result[exponent]
        return LaurentPolynomial._from_clean(self._rank, result)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial._from_clean(
            self._rank, {e: -c for e, c in self._terms.items()}
        )

    def __sub__(self, other: Any) -> LaurentPolynomial:
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: Any) -> LaurentPolynomial:
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return other_poly - self

    def scale(self, factor: int) -> LaurentPolynomial:
        """Multiply every coefficient by the integer ``factor``."""
        if factor == 0:
            return LaurentPolynomial.zero(self._rank)
        return LaurentPolynomial._from_clean(
            self._rank, {e: c * factor for e, c in self._terms.items()}
        )

    def __mul__(self, other: Any) -> LaurentPolynomial:
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_rank(other)
        result: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                result[key] = result.get(key, 0) + c1 * c2
        return LaurentPolynomial._from_clean(
            self._rank, {e: c for e, c in result.items() if c}
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPolynomial:
        if exponent < 0:
            raise ValueError(f"Power must be non-negative, got {exponent}")
        result = LaurentPolynomial.one(self._rank)
        for _ in range(exponent):
            result = result * self
        return result

    def adams(self, k: int) -> LaurentPolynomial:
        """Adams operation psi^k: every exponent vector scaled by ``k``.

        Raises:
            ValueError: If ``k`` is not a positive integer.
        """
        if k <= 0:
            raise ValueError(f"Adams operation needs k >= 1, got {k}")
        if k == 1:
            return self
        return LaurentPolynomial._from_clean(
            self._rank,
            {tuple(k * x for x in e): c for e, c in self._terms.items()},
        )

    def invert_variables(self, which: Iterable[int] | None = None) -> LaurentPolynomial:
        """Substitute x_j -> x_j^(-1) for the 0-based indices in ``which`` (all if None)."""
        indices = set(range(self._rank)) if which is None else set(which)
        if any(not 0 <= j < self._rank for j in indices):
            raise ValueError(f"Variable indices {sorted(indices)} out of range for rank {self._rank}")
        return LaurentPolynomial._from_clean(
            self._rank,
            {
                tuple(-x if j in indices else x for j, x in enumerate(e)): c
                for e, c in self._terms.items()
            },
        )

    def permute_variables(self, perm: Sequence[int]) -> LaurentPolynomial:
        """Rename variables: the exponent of x_j moves to position ``perm[j]``."""
        if sorted(perm) != list(range(self._rank)):
            raise ValueError(f"{tuple(perm)} is not a permutation of 0..{self._rank - 1}")
        result: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            moved = [0] * self._rank
            for j, x in enumerate(e):
                moved[perm[j]] = x
            result[tuple(moved)] = c
        return LaurentPolynomial._from_clean(self._rank, result)

    def leading_term(self) -> tuple[Exponent, int] | None:
        """Lexicographically largest term, or None for the zero polynomial."""
        if not self._terms:
            return None
        exponent = max(self._terms)
        return exponent, self._terms[exponent]

    def trailing_term(self) -> tuple[Exponent, int] | None:
        """Lexicographically smallest term, or None for the zero polynomial."""
        if not self._terms:
            return None
        exponent = min(self._terms)
        return exponent, self._terms[exponent]

    def evaluate_at_one(self) -> int:
        """Sum of all coefficients (the value at x_1 = ... = x_m = 1)."""
        return sum(self._terms.values())

    def exponent_bounds(self) -> tuple[Exponent, Exponent]:
        """Per-variable minimum and maximum doubled exponents.

        Raises:
            ValueError: For the zero polynomial.
        """
        if not self._terms:
            raise ValueError("The zero polynomial has no exponent bounds")
        columns = list(zip(*self._terms))
        return tuple(min(col) for col in columns), tuple(max(col) for col in columns)

    def divide_exact(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        """Exact quotient ``self / divisor``; see :func:`exact_divide`."""
        return exact_divide(self, divisor)

    def to_dict(self) -> dict[str, int]:
        """JSON-friendly mapping ``"e1,e2,..." -> coefficient``, leading term first."""
        return {
            ",".join(format_half(x) for x in e): c for e, c in self.terms()
        }

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exponent, coeff in self.terms():
            factors = []
            for j, x in enumerate(exponent, start=1):
                if x == 0:
                    continue
                if x == 2:
                    factors.append(f"x{j}")
                else:
                    factors.append(f"x{j}^({format_half(x)})")
            monomial = "*".join(factors)
            if not monomial:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(monomial)
            elif coeff == -1:
                pieces.append(f"-{monomial}")
            else:
                pieces.append(f"{coeff}*{monomial}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPolynomial(rank={self._rank}, terms={len(self._terms)})"


def add(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Termwise sum of two polynomials of equal rank."""
    return p + q


def mul(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Product of two polynomials of equal rank."""
    return p * q


def adams_substitute(p: LaurentPolynomial, k: int) -> LaurentPolynomial:
    """Adams operation psi^k(x_j) = x_j^k."""
    return p.adams(k)


def leading_term(p: LaurentPolynomial) -> tuple[Exponent, int] | None:
    """Leading term in lexicographic order, None for the zero polynomial."""
    return p.leading_term()


def evaluate_at_one(p: LaurentPolynomial) -> int:
    """Sum of coefficients."""
    return p.evaluate_at_one()


def exact_divide(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Divide ``num`` by ``den`` when the quotient is a Laurent polynomial.

    Long division by leading terms: the lexicographically largest remaining
    term of ``num`` is cancelled by a monomial multiple of ``den`` until the
    remainder vanishes. Every quotient exponent must lie in the box spanned by
    the per-variable exponent bounds of ``num`` minus those of ``den``; leaving
    that box, or a coefficient that does not divide, means the division is not
    exact.

    Raises:
        RankMismatchError: If the ranks differ.
        InexactDivisionError: If ``den`` is zero or the division leaves a remainder.
    """
    num._check_rank(den)
    rank = num.rank
    if den.is_zero():
        raise InexactDivisionError("Division by the zero polynomial")
    if num.is_zero():
        return LaurentPolynomial.zero(rank)

    lead_exp, lead_coeff = den.leading_term()  # type: ignore[misc]
    num_low, num_high = num.exponent_bounds()
    den_low, den_high = den.exponent_bounds()
    low = tuple(a - b for a, b in zip(num_low, den_low))
    high = tuple(a - b for a, b in zip(num_high, den_high))
    den_terms = list(den.items())

    remainder = dict(num.items())
    # max-heap on exponents via negated tuples; stale entries are skipped
    heap = [tuple(-x for x in e) for e in remainder]
    heapq.heapify(heap)
    quotient: dict[Exponent, int] = {}

    while remainder:
        exponent = tuple(-x for x in heapq.heappop(heap))
        coeff = remainder.get(exponent)
        if coeff is None:
            continue
        factor, rest = divmod(coeff, lead_coeff)
        q_exp = tuple(a - b for a, b in zip(exponent, lead_exp))
        if rest or any(not lo <= x <= hi for x, lo, hi in zip(q_exp, low, high)):
            raise InexactDivisionError(
                f"Remainder term {coeff}*x^{exponent} is not divisible by the "
                f"leading term {lead_coeff}*x^{lead_exp}"
            )
        quotient[q_exp] = factor
        for d_exp, d_coeff in den_terms:
            key = tuple(a + b for a, b in zip(q_exp, d_exp))
            current = remainder.get(key)
            updated = (current or 0) - factor * d_coeff
            if updated:
                if current is None:
                    heapq.heappush(heap, tuple(-x for x in key))
                remainder[key] = updated
            elif current is not None:
                del remainder[key]

    logger.debug(
        "[Laurent] exact_divide: %d / %d terms -> %d quotient terms",
        len(num), len(den), len(quotient),
    )
    return LaurentPolynomial._from_clean(rank, quotient)


def leibniz_determinant(matrix: Sequence[Sequence[LaurentPolynomial]]) -> LaurentPolynomial:
    """Determinant of a square matrix of polynomials by the Leibniz expansion.

    Raises:
        ValueError: If the matrix is empty or not square.
    """
    size = len(matrix)
    if size == 0 or any(len(row) != size for row in matrix):
        raise ValueError("Leibniz expansion needs a non-empty square matrix")
    rank = matrix[0][0].rank
    total = LaurentPolynomial.zero(rank)
    for perm in itertools.permutations(range(size)):
        product = LaurentPolynomial.constant(rank, Permutation(list(perm)).signature())
        for row, column in enumerate(perm):
            product = product * matrix[row][column]
            if product.is_zero():
                break
        total = total + product
    return total
