"""
trisolid.intersection - Divisor lattices with exact intersection forms.

A SurfaceModel carries a named basis of Num(X), its symmetric intersection
matrix, the canonical class and the numeric invariants (K^2, e, q, p_g).
Classes are numerical equivalence classes only: integer coordinate vectors
in the owning model's basis.

Also provides two kinds of ambient varieties:
- ProjectiveProduct: products of projective spaces (P^3, P^2 x P^2),
  intersected through the top-degree monomial of the cohomology ring.
- AmbientModel: a middle-codimension basis with its top product table,
  used for Schubert calculus on the Grassmannian G(1,3).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Tuple

import sympy as sp

from trisolid.errors import (
    BasisMismatchError,
    InvalidInputError,
    NonDivisibleClassError,
    UnsupportedModelError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DivisorClass:
    """
    A numerical divisor class: integer coordinates in a model's basis.

    Arithmetic is componentwise and only defined between classes of the
    same model.
    """

    coeffs: Tuple[int, ...]
    model_id: str

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"DivisorClass(({inner}) on {self.model_id})"

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: DivisorClass, operation: str) -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"{operation}: expected DivisorClass, got {other!r}")
        if other.model_id != self.model_id or len(other) != len(self):
            raise BasisMismatchError(operation, self.model_id, other.model_id)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other, "+")
        return DivisorClass(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.model_id
        )

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other, "-")
        return DivisorClass(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.model_id
        )

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-a for a in self.coeffs), self.model_id)

    def __mul__(self, k: int) -> DivisorClass:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return DivisorClass(tuple(k * a for a in self.coeffs), self.model_id)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def divide_exact(self, n: int) -> DivisorClass:
        """Divide every coefficient by n, failing unless all are divisible."""
        if n == 0 or any(a % n for a in self.coeffs):
            raise NonDivisibleClassError("divide_exact", n)
        return DivisorClass(tuple(a // n for a in self.coeffs), self.model_id)


@dataclass(frozen=True)
class SurfaceModel:
    """
    A smooth projective surface described by its numerical lattice.

    The abstract regular surface has an empty basis and stores only numeric
    invariants; intersecting on it is an error.
    """

    name: str
    basis: Tuple[str, ...]
    form: sp.ImmutableMatrix
    canonical: Optional[DivisorClass]
    q: int
    pg: int
    ksq: int
    euler: int

    def __post_init__(self) -> None:
        rank = len(self.basis)
        if self.form.shape != (rank, rank):
            raise InvalidInputError(
                "SurfaceModel", f"form has shape {self.form.shape}, basis rank {rank}"
            )
        if not self.form.is_symmetric():
            raise InvalidInputError(
                "SurfaceModel", f"form of {self.name} not symmetric"
            )
        if self.canonical is not None:
            if len(self.canonical) != rank or self.canonical.model_id != self.name:
                raise BasisMismatchError(
                    "SurfaceModel", self.name, self.canonical.model_id
                )
            k2 = _pair(self.form, self.canonical.coeffs, self.canonical.coeffs)
            if k2 != self.ksq:
                raise InvalidInputError(
                    "SurfaceModel", f"K^2 = {k2} on {self.name}, stored {self.ksq}"
                )

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def chi(self) -> int:
        """Holomorphic Euler characteristic 1 - q + p_g."""
        return 1 - self.q + self.pg

    def divisor(self, *coeffs: int) -> DivisorClass:
        """Build a class on this model from its coordinates."""
        if len(coeffs) != self.rank:
            raise InvalidInputError(
                "divisor", f"{self.name} has rank {self.rank}, got {len(coeffs)} coords"
            )
        return DivisorClass(tuple(int(c) for c in coeffs), self.name)

    def generator(self, name: str) -> DivisorClass:
        """The basis element called `name`."""
        if name not in self.basis:
            raise InvalidInputError("generator", f"{self.name} has no generator {name}")
        return self.divisor(*(1 if b == name else 0 for b in self.basis))

    def zero(self) -> DivisorClass:
        return self.divisor(*([0] * self.rank))


def _pair(form: sp.ImmutableMatrix, a: Tuple[int, ...], b: Tuple[int, ...]) -> int:
    return int((sp.ImmutableMatrix([list(a)]) * form * sp.ImmutableMatrix(list(b)))[0])


# -----------------------------------------------------------------------------
# Built-in Models
# -----------------------------------------------------------------------------


def _surface(
    name: str,
    basis: Tuple[str, ...],
    rows: list[list[int]],
    canonical: Tuple[int, ...],
    q: int,
    pg: int,
    ksq: int,
    euler: int,
) -> SurfaceModel:
    return SurfaceModel(
        name=name,
        basis=basis,
        form=sp.ImmutableMatrix(rows),
        canonical=DivisorClass(canonical, name),
        q=q,
        pg=pg,
        ksq=ksq,
        euler=euler,
    )


def projective_plane() -> SurfaceModel:
    """P^2 with hyperplane class h, K = -3h."""
    return _surface("P2", ("h",), [[1]], (-3,), q=0, pg=0, ksq=9, euler=3)


def quadric_surface() -> SurfaceModel:
    """P^1 x P^1 with the two rulings f1, f2, K = -2f1 - 2f2."""
    return _surface(
        "P1xP1", ("f1", "f2"), [[0, 1], [1, 0]], (-2, -2), q=0, pg=0, ksq=8, euler=4
    )


def ruled_surface(q: int, e: int) -> SurfaceModel:
    """
    The ruled surface of genus q with invariant e, normalized basis (sigma, f).

    sigma^2 = -e, sigma.f = 1, f^2 = 0 and K = -2 sigma + (2q - 2 - e) f.
    Geometric ruled surfaces need e >= 0 over P^1 and e >= -q otherwise.
    """
    if q < 0:
        raise InvalidInputError("ruled_surface", f"genus must be >= 0, got {q}")
    if (q == 0 and e < 0) or (q > 0 and e < -q):
        raise InvalidInputError("ruled_surface", f"no ruled surface with q={q}, e={e}")
    name = f"F{e}" if q == 0 else f"ruled(q={q},e={e})"
    return _surface(
        name,
        ("sigma", "f"),
        [[-e, 1], [1, 0]],
        (-2, 2 * q - 2 - e),
        q=q,
        pg=0,
        ksq=8 * (1 - q),
        euler=4 * (1 - q),
    )


def hirzebruch(e: int) -> SurfaceModel:
    """The Segre-Hirzebruch surface F_e."""
    return ruled_surface(0, e)


def abstract_regular_surface(name: str, ksq: int, euler: int, pg: int) -> SurfaceModel:
    """A regular surface known only through (K^2, e, p_g); it has no basis."""
    return SurfaceModel(
        name=name,
        basis=(),
        form=sp.ImmutableMatrix(0, 0, []),
        canonical=None,
        q=0,
        pg=pg,
        ksq=ksq,
        euler=euler,
    )


# -----------------------------------------------------------------------------
# Operations
# -----------------------------------------------------------------------------


def intersect(model: SurfaceModel, d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number D1 . D2 = D1^T form D2."""
    if not model.basis:
        raise UnsupportedModelError("intersect", model.name)
    for d in (d1, d2):
        if d.model_id != model.name or len(d) != model.rank:
            raise BasisMismatchError("intersect", model.name, d.model_id)
    return _pair(model.form, d1.coeffs, d2.coeffs)


def self_intersection(model: SurfaceModel, d: DivisorClass) -> int:
    return intersect(model, d, d)


def canonical_class(model: SurfaceModel) -> DivisorClass:
    """The canonical class of a built-in model."""
    if model.canonical is None:
        raise UnsupportedModelError("canonical_class", model.name)
    return model.canonical


def hodge_index_numeric(a_sq: int, ab: int, b_sq: int) -> bool:
    """(A.B)^2 >= A^2 B^2 whenever A^2 > 0; vacuous otherwise."""
    if a_sq <= 0:
        return True
    return ab * ab >= a_sq * b_sq


def hodge_index_holds(model: SurfaceModel, d1: DivisorClass, d2: DivisorClass) -> bool:
    """Hodge index inequality for a pair of classes on `model`."""
    return hodge_index_numeric(
        intersect(model, d1, d1), intersect(model, d1, d2), intersect(model, d2, d2)
    )


# -----------------------------------------------------------------------------
# Ambient Varieties
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjectiveProduct:
    """
    A product of projective spaces P^{n_1} x ... x P^{n_k}.

    Divisors are multidegrees (a_1, ..., a_k) = sum a_i h_i, and h_i^{n_i+1} = 0.
    """

    name: str
    dims: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def intersect_divisors(self, *multidegrees: Tuple[int, ...]) -> int:
        """Top intersection of dim-many divisors given by multidegree."""
        if len(multidegrees) != self.dimension:
            raise InvalidInputError(
                "intersect_divisors",
                f"{self.name} needs {self.dimension} divisors, got {len(multidegrees)}",
            )
        gens = sp.symbols(f"h1:{len(self.dims) + 1}")
        product = sp.Integer(1)
        for degree in multidegrees:
            if len(degree) != len(self.dims):
                raise InvalidInputError(
                    "intersect_divisors", f"multidegree {degree} on {self.name}"
                )
            product *= sum(a * h for a, h in zip(degree, gens))
        poly = sp.Poly(sp.expand(product), *gens)
        top = sp.Mul(*(h**n for h, n in zip(gens, self.dims)))
        return int(poly.coeff_monomial(top))


P3 = ProjectiveProduct("P3", (3,))
P2xP2 = ProjectiveProduct("P2xP2", (2, 2))


class SchubertClass(Enum):
    """Codimension-2 classes on G(1,3) in the Schubert basis."""

    OMEGA_03 = "Omega(0,3)"
    OMEGA_12 = "Omega(1,2)"
    HYPERPLANE_SQUARED = "sigma1^2"


@dataclass(frozen=True)
class AmbientModel:
    """
    A variety known through a middle-codimension basis and its top products.

    `hyperplane_square` gives the square of the hyperplane class in the basis.
    """

    name: str
    basis: Tuple[str, ...]
    table: sp.ImmutableMatrix
    hyperplane_square: Tuple[int, ...]

    def top_product(self, left: Tuple[int, ...], right: Tuple[int, ...]) -> int:
        return _pair(self.table, left, right)

    def coordinates(self, cls: SchubertClass) -> Tuple[int, ...]:
        if cls is SchubertClass.HYPERPLANE_SQUARED:
            return self.hyperplane_square
        return tuple(1 if b == cls.value else 0 for b in self.basis)


GRASSMANNIAN = AmbientModel(
    name="G(1,3)",
    basis=(SchubertClass.OMEGA_03.value, SchubertClass.OMEGA_12.value),
    table=sp.ImmutableMatrix([[1, 0], [0, 1]]),
    hyperplane_square=(1, 1),
)


def schubert_surface_product(alpha: int, beta: int, other: SchubertClass) -> int:
    """Top intersection of the surface class alpha Omega(0,3) + beta Omega(1,2)."""
    return GRASSMANNIAN.top_product((alpha, beta), GRASSMANNIAN.coordinates(other))
