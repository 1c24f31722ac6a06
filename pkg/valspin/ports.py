"""Abstract base classes (ports) shared by the valspin modules.

Representations of so(2m+1) and curvature models of projective spaces are
consumed by the valuation tables and the CLI through these interfaces, so the
concrete classes can be swapped without touching the callers.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import numpy as np

    from valspin.laurent import LaurentPolynomial
    from valspin.lie_type_b import Decomposition

__all__ = [
    "AbstractRepresentation",
    "AbstractCurvatureModel",
]


class AbstractRepresentation(ABC):
    """Interface for a finite-dimensional representation of so(2m+1).

    Implementations must provide:
        rank (int): The rank m of the Lie algebra.
        label (str): Human-readable description used in logs and reports.
    """

    @property
    @abstractmethod
    def rank(self) -> int:
        """Rank m of so(2m+1)."""
        pass

    @property
    @abstractmethod
    def label(self) -> str:
        """Short description such as ``"Λ^3(Γ[1/2,1/2,1/2,1/2])"``."""
        pass

    @abstractmethod
    def character(self) -> LaurentPolynomial:
        """Character of the representation as an exact Laurent polynomial."""
        pass

    def dimension(self) -> int:
        """Dimension, i.e. the character evaluated at 1."""
        return self.character().evaluate_at_one()

    @abstractmethod
    def decompose(self) -> Decomposition:
        """Decomposition into irreducible representations.

        Raises:
            NotACharacterError: If the character is not that of a representation.
        """
        pass


class AbstractCurvatureModel(ABC):
    """Interface for the sectional curvature of a rank-one symmetric space.

    A tangent 2-plane is handed over as an orthonormal pair of real vectors
    in the model tangent space.

    Implementations must provide:
        name (str): Short name used by the CLI ("cpn", "hpn", "op2").
        identity (str): The valuation identity checked against the curvature.
    """

    name: str
    identity: str

    @property
    @abstractmethod
    def tangent_dimension(self) -> int:
        """Real dimension of the tangent space."""
        pass

    @abstractmethod
    def sectional_curvature(self, u: np.ndarray, v: np.ndarray) -> float:
        """Sectional curvature of the plane spanned by ``u`` and ``v``.

        Raises:
            ValueError: If ``u``, ``v`` are not orthonormal.
        """
        pass

    @abstractmethod
    def klain_terms(self, u: np.ndarray, v: np.ndarray) -> dict[str, tuple[float, float]]:
        """Klain values at the plane of the valuations in the identity.

        Returns:
            Mapping from valuation name to (coefficient, Klain value).
        """
        pass
