"""Octonions and the sectional curvature of the rank-one projective spaces.

Octonions are 8 real coordinates in the basis {1, e1, ..., e7}, multiplied by
Cayley-Dickson doubling of the quaternions:

    (a, b)(c, d) = (ac - conj(d) b, da + b conj(c))

so that e1 e2 = e3 and the quaternions are span{1, e1, e2, e3}. Tangent
vectors are flat real numpy arrays: R^{2n} for CP^n with coordinates
(Re z1, Im z1, ...), R^{4n} for HP^n in blocks of four, R^16 = O² for OP².
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from valspin.ports import AbstractCurvatureModel

logger = logging.getLogger(__name__)

__all__ = [
    "TOLERANCE",
    "UnsupportedPlaneError",
    "Octonion",
    "oct_mul",
    "oct_inner",
    "oct_conj",
    "wedge_norm_sq",
    "associator",
    "quaternion_mul",
    "quaternion_conj",
    "TangentPlanePair",
    "octonionic_line_projection",
    "sectional_curvature_op2",
    "brown_gray_expression",
    "standard_complex_structure",
    "kaehler_cos_sq",
    "kaehler_angle",
    "sectional_curvature_cpn",
    "quaternionic_hermitian_product",
    "quaternionic_angle",
    "sectional_curvature_hpn",
    "quaternionic_structures",
    "curvature_tensor",
    "tensor_sectional_curvature",
    "random_orthonormal_pair",
    "ComplexProjectiveSpace",
    "QuaternionicProjectiveSpace",
    "OctonionicProjectivePlane",
    "REFERENCE_PLANES",
    "octonionic_pseudo_volume_klain",
    "KlainIdentityReport",
    "model_for",
    "klain_identity_check",
]

TOLERANCE = 1e-9


class UnsupportedPlaneError(ValueError):
    """Raised when a Klain value is requested at a plane where it is not known."""


def _cd_conj(x: np.ndarray) -> np.ndarray:
    result = -x
    result[0] = x[0]
    return result


def _cd_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    size = len(x)
    if size == 1:
        return x * y
    half = size // 2
    a, b = x[:half], x[half:]
    c, d = y[:half], y[half:]
    return np.concatenate(
        [
            _cd_mul(a, c) - _cd_mul(_cd_conj(d), b),
            _cd_mul(d, a) + _cd_mul(b, _cd_conj(c)),
        ]
    )


class Octonion:
    """Immutable octonion backed by a read-only float array of length 8."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Any) -> None:
        """Create an octonion from 8 real coordinates.

        Raises:
            ValueError: If the input does not have exactly 8 finite entries.
        """
        array = np.array(coords, dtype=float).reshape(-1)
        if array.shape != (8,):
            raise ValueError(f"An octonion has 8 coordinates, got {array.size}")
        if not np.all(np.isfinite(array)):
            raise ValueError(f"Octonion coordinates must be finite, got {array}")
        array.setflags(write=False)
        self._coords = array

    @classmethod
    def basis(cls, i: int) -> Octonion:
        """Basis element e_i (e_0 = 1)."""
        if not 0 <= i <= 7:
            raise ValueError(f"Basis index must be in 0..7, got {i}")
        coords = np.zeros(8)
        coords[i] = 1.0
        return cls(coords)

    @classmethod
    def real(cls, value: float) -> Octonion:
        """The real octonion ``value · 1``."""
        return cls([value] + [0.0] * 7)

    @classmethod
    def zero(cls) -> Octonion:
        return cls(np.zeros(8))

    @classmethod
    def one(cls) -> Octonion:
        return cls.basis(0)

    @property
    def coords(self) -> np.ndarray:
        """Read-only coordinate array."""
        return self._coords

    @property
    def real_part(self) -> float:
        return float(self._coords[0])

    @property
    def imaginary_part(self) -> Octonion:
        """Projection onto O', the pure octonions."""
        coords = self._coords.copy()
        coords[0] = 0.0
        return Octonion(coords)

    def conj(self) -> Octonion:
        """Conjugate: negates e1..e7."""
        return Octonion(_cd_conj(self._coords))

    def norm_sq(self) -> float:
        return float(self._coords @ self._coords)

    def norm(self) -> float:
        return float(np.linalg.norm(self._coords))

    def inner(self, other: Octonion) -> float:
        """Euclidean inner product of the coordinate vectors."""
        return float(self._coords @ other._coords)

    def inverse(self) -> Octonion:
        """conj(a) / |a|².

        Raises:
            ValueError: If the octonion is zero.
        """
        norm_sq = self.norm_sq()
        if norm_sq == 0.0:
            raise ValueError("The zero octonion has no inverse")
        return Octonion(_cd_conj(self._coords) / norm_sq)

    def is_close(self, other: Octonion, tol: float = TOLERANCE) -> bool:
        """True if all coordinates agree within ``tol``."""
        return bool(np.allclose(self._coords, other._coords, rtol=0.0, atol=tol))

    def __add__(self, other: Octonion) -> Octonion:
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(self._coords + other._coords)

    def __sub__(self, other: Octonion) -> Octonion:
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(self._coords - other._coords)

    def __neg__(self) -> Octonion:
        return Octonion(-self._coords)

    def __mul__(self, other: Any) -> Octonion:
        if isinstance(other, Octonion):
            return Octonion(_cd_mul(self._coords, other._coords))
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Octonion(self._coords * float(other))
        return NotImplemented

    def __rmul__(self, other: Any) -> Octonion:
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Octonion(self._coords * float(other))
        return NotImplemented

    def __truediv__(self, other: Any) -> Octonion:
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Octonion(self._coords / float(other))
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Octonion):
            return NotImplemented
        return bool(np.array_equal(self._coords, other._coords))

    def __hash__(self) -> int:
        return hash(tuple(self._coords.tolist()))

    def __repr__(self) -> str:
        return f"Octonion({self._coords.tolist()})"


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    """Octonion product ab."""
    return a * b


def oct_inner(a: Octonion, b: Octonion) -> float:
    """Real inner product ⟨a, b⟩."""
    return a.inner(b)


def oct_conj(a: Octonion) -> Octonion:
    return a.conj()


def wedge_norm_sq(a: Octonion, b: Octonion) -> float:
    """‖a ∧ b‖² = ‖a‖²‖b‖² - ⟨a, b⟩²."""
    return a.norm_sq() * b.norm_sq() - a.inner(b) ** 2


def associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion:
    """[a, b, c] = (ab)c - a(bc)."""
    return (a * b) * c - a * (b * c)


def quaternion_mul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Product of quaternions given as 4-arrays (1, i, j, k), the subalgebra span{1, e1, e2, e3}."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != (4,) or q.shape != (4,):
        raise ValueError(f"Quaternions have 4 coordinates, got {p.shape} and {q.shape}")
    return _cd_mul(p, q)


def quaternion_conj(p: np.ndarray) -> np.ndarray:
    return _cd_conj(np.asarray(p, dtype=float))


def _as_vector(x: Any, dim: int, name: str) -> np.ndarray:
    vector = np.asarray(x, dtype=float).reshape(-1)
    if vector.shape != (dim,):
        raise ValueError(f"{name} must have {dim} real coordinates, got {vector.size}")
    return vector


def _check_orthonormal(u: np.ndarray, v: np.ndarray, tol: float = TOLERANCE) -> None:
    norm_u = float(np.linalg.norm(u))
    norm_v = float(np.linalg.norm(v))
    if abs(norm_u - 1.0) > tol:
        raise ValueError(f"u must have unit norm, got |u| = {norm_u:.12g}")
    if abs(norm_v - 1.0) > tol:
        raise ValueError(f"v must have unit norm, got |v| = {norm_v:.12g}")
    product = float(u @ v)
    if abs(product) > tol:
        raise ValueError(f"u and v must be orthogonal, got <u,v> = {product:.12g}")


@dataclass(frozen=True)
class TangentPlanePair:
    """Orthonormal pair u = (a, b), v = (c, d) in O² spanning a 2-plane E."""

    u: tuple[Octonion, Octonion]
    v: tuple[Octonion, Octonion]

    def __post_init__(self) -> None:
        """Validate orthonormality."""
        if len(self.u) != 2 or len(self.v) != 2:
            raise ValueError("u and v must each be a pair of octonions")
        u_vec, v_vec = self.as_vectors()
        _check_orthonormal(u_vec, v_vec)

    @classmethod
    def from_vectors(cls, u: Any, v: Any) -> TangentPlanePair:
        """Build from two flat 16-vectors (first 8 coordinates = first octonion)."""
        u_vec = _as_vector(u, 16, "u")
        v_vec = _as_vector(v, 16, "v")
        return cls(
            (Octonion(u_vec[:8]), Octonion(u_vec[8:])),
            (Octonion(v_vec[:8]), Octonion(v_vec[8:])),
        )

    @property
    def a(self) -> Octonion:
        return self.u[0]

    @property
    def b(self) -> Octonion:
        return self.u[1]

    @property
    def c(self) -> Octonion:
        return self.v[0]

    @property
    def d(self) -> Octonion:
        return self.v[1]

    def as_vectors(self) -> tuple[np.ndarray, np.ndarray]:
        """The pair as flat 16-vectors."""
        return (
            np.concatenate([self.u[0].coords, self.u[1].coords]),
            np.concatenate([self.v[0].coords, self.v[1].coords]),
        )

    def projector(self) -> np.ndarray:
        """Orthogonal projector onto E; depends only on the plane."""
        u_vec, v_vec = self.as_vectors()
        return np.outer(u_vec, u_vec) + np.outer(v_vec, v_vec)

    def rotated(self, theta: float) -> TangentPlanePair:
        """Another orthonormal basis of the same plane."""
        u_vec, v_vec = self.as_vectors()
        cos, sin = np.cos(theta), np.sin(theta)
        return TangentPlanePair.from_vectors(cos * u_vec + sin * v_vec, -sin * u_vec + cos * v_vec)


def octonionic_line_projection(plane: TangentPlanePair) -> float:
    """Squared norm of the projection of v onto the octonionic line through u.

    The lines of O² are {(x, m x)} and {(n y, y)}; for |a| >= |b| the line
    through u = (a, b) has slope m = b a⁻¹, otherwise n = a b⁻¹.
    """
    a, b, c, d = plane.a, plane.b, plane.c, plane.d
    if a.norm_sq() >= b.norm_sq():
        m = b * a.inverse()
        return (c + m.conj() * d).norm_sq() / (1.0 + m.norm_sq())
    n = a * b.inverse()
    return (n.conj() * c + d).norm_sq() / (1.0 + n.norm_sq())


def sectional_curvature_op2(plane: TangentPlanePair) -> float:
    """Sectional curvature of OP² at the plane E spanned by u and v.

    K = 1 + 3‖π v‖², π the projection onto the octonionic line through u:
    4 on planes inside an octonionic line, 1 on planes orthogonal to one.
    """
    curvature = 1.0 + 3.0 * octonionic_line_projection(plane)
    logger.debug("[Octonion] K_OP2 = %.12g", curvature)
    return curvature


def brown_gray_expression(plane: TangentPlanePair) -> float:
    """The closed cross-term expression with products formed first.

    4[‖a∧c‖² + ‖b∧d‖² + ¼‖a‖²‖d‖² + ¼‖b‖²‖c‖² + ½⟨ab, cd⟩ - ⟨ad, bc⟩]

    Equals the sectional curvature at the two reference planes and on planes
    with real entries; it is not invariant under a change of basis of E in
    general, so it is not used for the curvature itself.
    """
    a, b, c, d = plane.a, plane.b, plane.c, plane.d
    return 4.0 * (
        wedge_norm_sq(a, c)
        + wedge_norm_sq(b, d)
        + 0.25 * a.norm_sq() * d.norm_sq()
        + 0.25 * b.norm_sq() * c.norm_sq()
        + 0.5 * (a * b).inner(c * d)
        - (a * d).inner(b * c)
    )


def standard_complex_structure(n: int) -> np.ndarray:
    """Multiplication by i on C^n ≅ R^{2n}, coordinates (Re z1, Im z1, ...)."""
    if n < 1:
        raise ValueError(f"Complex dimension must be positive, got {n}")
    return np.kron(np.eye(n), np.array([[0.0, -1.0], [1.0, 0.0]]))


def kaehler_cos_sq(v: Any, w: Any, J: np.ndarray | None = None) -> float:
    """cos²φ(E) = ⟨v, J w⟩² for an orthonormal pair v, w.

    Raises:
        ValueError: If the vectors are not orthonormal or of odd length.
    """
    v = np.asarray(v, dtype=float).reshape(-1)
    if v.size == 0 or v.size % 2:
        raise ValueError(f"Vectors in C^n need an even positive length, got {v.size}")
    w = _as_vector(w, v.size, "w")
    _check_orthonormal(v, w)
    if J is None:
        J = standard_complex_structure(v.size // 2)
    return float(np.clip((v @ (J @ w)) ** 2, 0.0, 1.0))


def kaehler_angle(v: Any, w: Any, J: np.ndarray | None = None) -> float:
    """Kähler angle φ(E) in [0, π/2]."""
    return float(np.arccos(np.sqrt(kaehler_cos_sq(v, w, J))))


def sectional_curvature_cpn(v: Any, w: Any, J: np.ndarray | None = None) -> float:
    """K(E) = 1 + 3cos²φ(E) on CP^n."""
    return 1.0 + 3.0 * kaehler_cos_sq(v, w, J)


def quaternionic_hermitian_product(u1: Any, u2: Any) -> np.ndarray:
    """⟨u1, u2⟩_H = Σ conj(u1_r) u2_r for vectors in the right H-module H^n."""
    u1 = np.asarray(u1, dtype=float).reshape(-1)
    if u1.size == 0 or u1.size % 4:
        raise ValueError(f"Vectors in H^n need a positive length divisible by 4, got {u1.size}")
    u2 = _as_vector(u2, u1.size, "u2")
    total = np.zeros(4)
    for r in range(0, u1.size, 4):
        total += _cd_mul(_cd_conj(u1[r:r + 4]), u2[r:r + 4])
    return total


def quaternionic_angle(u1: Any, u2: Any) -> float:
    """λ = ‖Im ⟨u1, u2⟩_H‖ for a real-orthonormal pair, in [0, 1]."""
    u1 = np.asarray(u1, dtype=float).reshape(-1)
    u2 = np.asarray(u2, dtype=float).reshape(-1)
    product = quaternionic_hermitian_product(u1, u2)
    _check_orthonormal(u1, u2)
    return float(min(np.linalg.norm(product[1:]), 1.0))


def sectional_curvature_hpn(u1: Any, u2: Any) -> float:
    """K(E) = 1 + 3λ² on HP^n."""
    return 1.0 + 3.0 * quaternionic_angle(u1, u2) ** 2


def quaternionic_structures(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Right multiplication by i, j, k on H^n ≅ R^{4n} as real matrices."""
    if n < 1:
        raise ValueError(f"Quaternionic dimension must be positive, got {n}")
    identity = np.eye(4)
    structures = []
    for q in identity[1:]:
        block = np.column_stack([_cd_mul(identity[t], q) for t in range(4)])
        structures.append(np.kron(np.eye(n), block))
    return tuple(structures)


def curvature_tensor(
    x: np.ndarray, y: np.ndarray, z: np.ndarray, structures: Sequence[np.ndarray]
) -> np.ndarray:
    """R(x, y)z of the projective space whose tangent space carries ``structures``.

    R(X,Y)Z = ⟨Y,Z⟩X - ⟨X,Z⟩Y
              + Σ_a (⟨J_a Y,Z⟩J_a X - ⟨J_a X,Z⟩J_a Y - 2⟨J_a X,Y⟩J_a Z)

    One complex structure gives the Fubini-Study metric of CP^n, the three
    right multiplications of H^n give HP^n; sectional curvatures lie in [1, 4].
    """
    result = (y @ z) * x - (x @ z) * y
    for J in structures:
        jx, jy = J @ x, J @ y
        result = result + (jy @ z) * jx - (jx @ z) * jy - 2.0 * (jx @ y) * (J @ z)
    return result


def tensor_sectional_curvature(u: Any, v: Any, structures: Sequence[np.ndarray]) -> float:
    """⟨R(u,v)v, u⟩ / |u ∧ v|² computed from the curvature tensor.

    Raises:
        ValueError: If u and v are linearly dependent.
    """
    u = np.asarray(u, dtype=float).reshape(-1)
    v = _as_vector(v, u.size, "v")
    area_sq = float((u @ u) * (v @ v) - (u @ v) ** 2)
    if area_sq <= TOLERANCE:
        raise ValueError("u and v do not span a plane")
    return float(curvature_tensor(u, v, v, structures) @ u) / area_sq


def random_orthonormal_pair(rng: np.random.Generator, dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Random orthonormal pair in R^dim from Gaussian samples."""
    if dim < 2:
        raise ValueError(f"Need dimension at least 2 for a plane, got {dim}")
    u = rng.standard_normal(dim)
    u /= np.linalg.norm(u)
    v = rng.standard_normal(dim)
    v -= (v @ u) * u
    v /= np.linalg.norm(v)
    return u, v


def _unit(dim: int, *entries: tuple[int, float]) -> np.ndarray:
    vector = np.zeros(dim)
    for index, value in entries:
        vector[index] = value
    return vector


# Klain value of the octonionic pseudo-volume at the planes where it is known
REFERENCE_PLANES: dict[str, tuple[np.ndarray, np.ndarray, float]] = {
    "E_(1,0),(i,0)": (_unit(16, (0, 1.0)), _unit(16, (1, 1.0)), 0.0),
    "E_(1,0),(0,1)": (_unit(16, (0, 1.0)), _unit(16, (8, 1.0)), 1.0),
}


def octonionic_pseudo_volume_klain(plane: TangentPlanePair) -> float:
    """Klain value of the octonionic pseudo-volume at one of the reference planes.

    Raises:
        UnsupportedPlaneError: If the plane is neither reference plane.
    """
    projector = plane.projector()
    for name, (u, v, value) in REFERENCE_PLANES.items():
        reference = np.outer(u, u) + np.outer(v, v)
        if np.allclose(projector, reference, rtol=0.0, atol=TOLERANCE):
            logger.debug("[Octonion] Plane matched reference %s", name)
            return value
    raise UnsupportedPlaneError(
        f"Octonionic pseudo-volume is only known at the planes {', '.join(REFERENCE_PLANES)}"
    )


class ComplexProjectiveSpace(AbstractCurvatureModel):
    """CP^n with holomorphic curvature 4."""

    name = "cpn"
    identity = "T²μ_sec = τ_2,0 + 3τ_2,1"

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"Complex dimension must be positive, got {n}")
        self._n = n

    @property
    def tangent_dimension(self) -> int:
        return 2 * self._n

    @property
    def structures(self) -> tuple[np.ndarray, ...]:
        return (standard_complex_structure(self._n),)

    def sectional_curvature(self, u: np.ndarray, v: np.ndarray) -> float:
        u = _as_vector(u, self.tangent_dimension, "u")
        v = _as_vector(v, self.tangent_dimension, "v")
        _check_orthonormal(u, v)
        return tensor_sectional_curvature(u, v, self.structures)

    def klain_terms(self, u: np.ndarray, v: np.ndarray) -> dict[str, tuple[float, float]]:
        cos_sq = kaehler_cos_sq(
            _as_vector(u, self.tangent_dimension, "u"), _as_vector(v, self.tangent_dimension, "v")
        )
        return {"tau_2,0": (1.0, 1.0), "tau_2,1": (3.0, cos_sq)}


class QuaternionicProjectiveSpace(AbstractCurvatureModel):
    """HP^n, a right H-module in each tangent space."""

    name = "hpn"
    identity = "T²μ_sec = μ_2 + 3τ"

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"Quaternionic dimension must be positive, got {n}")
        self._n = n

    @property
    def tangent_dimension(self) -> int:
        return 4 * self._n

    @property
    def structures(self) -> tuple[np.ndarray, ...]:
        return quaternionic_structures(self._n)

    def sectional_curvature(self, u: np.ndarray, v: np.ndarray) -> float:
        u = _as_vector(u, self.tangent_dimension, "u")
        v = _as_vector(v, self.tangent_dimension, "v")
        _check_orthonormal(u, v)
        return tensor_sectional_curvature(u, v, self.structures)

    def klain_terms(self, u: np.ndarray, v: np.ndarray) -> dict[str, tuple[float, float]]:
        angle = quaternionic_angle(
            _as_vector(u, self.tangent_dimension, "u"), _as_vector(v, self.tangent_dimension, "v")
        )
        return {"mu_2": (1.0, 1.0), "tau": (3.0, angle**2)}


class OctonionicProjectivePlane(AbstractCurvatureModel):
    """OP², tangent space O² = R^16."""

    name = "op2"
    identity = "T²μ_sec = 4μ_2 - 3τ_oct"

    @property
    def tangent_dimension(self) -> int:
        return 16

    def sectional_curvature(self, u: np.ndarray, v: np.ndarray) -> float:
        return sectional_curvature_op2(TangentPlanePair.from_vectors(u, v))

    def klain_terms(self, u: np.ndarray, v: np.ndarray) -> dict[str, tuple[float, float]]:
        plane = TangentPlanePair.from_vectors(u, v)
        return {"mu_2": (4.0, 1.0), "tau_oct": (-3.0, octonionic_pseudo_volume_klain(plane))}


@dataclass(frozen=True)
class KlainIdentityReport:
    """Both sides of a curvature identity at one plane."""

    space: str
    identity: str
    curvature: float
    terms: dict[str, tuple[float, float]] = field(default_factory=dict)

    @property
    def combination(self) -> float:
        """Σ coefficient · Klain value."""
        return sum(coeff * value for coeff, value in self.terms.values())

    @property
    def difference(self) -> float:
        return abs(self.combination - self.curvature)

    @property
    def holds(self) -> bool:
        return self.difference <= TOLERANCE

    def to_dict(self) -> dict[str, Any]:
        return {
            "space": self.space,
            "identity": self.identity,
            "curvature": self.curvature,
            "terms": {
                name: {"coefficient": coeff, "klain": value}
                for name, (coeff, value) in self.terms.items()
            },
            "combination": self.combination,
            "holds": self.holds,
        }


def model_for(space: str, tangent_dimension: int) -> AbstractCurvatureModel:
    """Curvature model named ``space`` with the given real tangent dimension.

    Raises:
        ValueError: If the name is unknown or the dimension does not fit.
    """
    if space == ComplexProjectiveSpace.name:
        if tangent_dimension < 2 or tangent_dimension % 2:
            raise ValueError(f"CP^n needs an even tangent dimension, got {tangent_dimension}")
        return ComplexProjectiveSpace(tangent_dimension // 2)
    if space == QuaternionicProjectiveSpace.name:
        if tangent_dimension < 4 or tangent_dimension % 4:
            raise ValueError(
                f"HP^n needs a tangent dimension divisible by 4, got {tangent_dimension}"
            )
        return QuaternionicProjectiveSpace(tangent_dimension // 4)
    if space == OctonionicProjectivePlane.name:
        if tangent_dimension != 16:
            raise ValueError(f"OP² has tangent dimension 16, got {tangent_dimension}")
        return OctonionicProjectivePlane()
    raise ValueError(f"Unknown space {space!r}; choose from cpn, hpn, op2")


def klain_identity_check(
    space: str | AbstractCurvatureModel, u: Any, v: Any
) -> KlainIdentityReport:
    """Evaluate the curvature and the valuation identity at the plane spanned by u, v.

    Raises:
        ValueError: If the vectors are invalid for the space.
        UnsupportedPlaneError: For OP² away from the reference planes.
    """
    u = np.asarray(u, dtype=float).reshape(-1)
    v = np.asarray(v, dtype=float).reshape(-1)
    model = space if isinstance(space, AbstractCurvatureModel) else model_for(space, u.size)
    report = KlainIdentityReport(
        space=model.name,
        identity=model.identity,
        curvature=model.sectional_curvature(u, v),
        terms=model.klain_terms(u, v),
    )
    if not report.holds:
        logger.warning(
            "[Octonion] %s identity off by %.3g at this plane", model.name, report.difference
        )
    return report
