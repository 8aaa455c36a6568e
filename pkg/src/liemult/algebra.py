"""Lie algebras given by structure constant tables.

A :class:`LieAlgebra` is a basis x_0, ..., x_{n-1} (0-based internally;
documents and printed output use 1-based indices) together with the
coefficient vectors of [x_i, x_j] for i < j.  Antisymmetry is structural:
[x_j, x_i] is -[x_i, x_j] by definition and [x_i, x_i] = 0.  The Jacobi
identity is *checked*, not assumed; :meth:`LieAlgebra.validate` returns
the list of violating triples, empty exactly when the table is a Lie
algebra.

Characteristic subspaces (derived subalgebra, lower central series,
center) are returned as :class:`~liemult.linalg.Subspace` values in the
coordinates of the given basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .fields import FieldSpec
from .linalg import Matrix, Subspace, invert, kernel


class JacobiViolation(NamedTuple):
    i: int
    j: int
    k: int
    residual: tuple


class LieAlgebra:
    __slots__ = ("field", "dim", "table", "labels")

    def __init__(
        self,
        field: FieldSpec,
        dim: int,
        brackets: Mapping[tuple[int, int], Sequence] | Iterable[tuple[int, int, Sequence]] = (),
        labels: Sequence[str] | None = None,
    ):
        if dim < 0:
            raise ValueError("negative dimension")
        if isinstance(brackets, Mapping):
            items = brackets.items()
        else:
            items = ((key[:2], key[2]) for key in brackets)
        table: dict[tuple[int, int], tuple] = {}
        for (i, j), coeffs in items:
            if not (0 <= i < j < dim):
                raise ValueError(f"bad bracket pair ({i}, {j}) for dimension {dim}")
            if (i, j) in table:
                raise ValueError(f"duplicate bracket pair ({i}, {j})")
            vec = tuple(field.of(x) for x in coeffs)
            if len(vec) != dim:
                raise ValueError(f"bracket ({i}, {j}) has {len(vec)} coefficients, need {dim}")
            if any(vec):
                table[(i, j)] = vec
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != dim:
                raise ValueError("labels length must equal dim")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "table", dict(sorted(table.items())))
        object.__setattr__(self, "labels", labels or tuple(f"x{i+1}" for i in range(dim)))

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    # -- basic bracket machinery -------------------------------------------

    def structure_vector(self, i: int, j: int) -> tuple:
        """[x_i, x_j] for any i, j, with antisymmetry applied."""
        if i == j:
            return (self.field.zero,) * self.dim
        if i < j:
            vec = self.table.get((i, j))
            if vec is None:
                return (self.field.zero,) * self.dim
            return vec
        vec = self.table.get((j, i))
        if vec is None:
            return (self.field.zero,) * self.dim
        return tuple(-x for x in vec)

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        """Bilinear extension of the table to coordinate vectors."""
        zero = self.field.zero
        out = [zero] * self.dim
        u = [self.field.of(x) for x in u]
        v = [self.field.of(x) for x in v]
        for (i, j), vec in self.table.items():
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                out = [a + coef * b for a, b in zip(out, vec)]
        return tuple(out)

    def basis_vector(self, i: int) -> tuple:
        zero, one = self.field.zero, self.field.one
        return tuple(one if k == i else zero for k in range(self.dim))

    @property
    def is_abelian(self) -> bool:
        return not self.table

    def validate(self) -> list[JacobiViolation]:
        """Jacobi residuals [[xi,xj],xk] + [[xj,xk],xi] + [[xk,xi],xj] over all triples."""
        violations = []
        n = self.dim
        for i in range(n):
            ei = self.basis_vector(i)
            for j in range(i + 1, n):
                ej = self.basis_vector(j)
                bij = self.structure_vector(i, j)
                for k in range(j + 1, n):
                    ek = self.basis_vector(k)
                    term = self.bracket(bij, ek)
                    term2 = self.bracket(self.structure_vector(j, k), ei)
                    term3 = self.bracket(self.structure_vector(k, i), ej)
                    residual = tuple(a + b + c for a, b, c in zip(term, term2, term3))
                    if any(residual):
                        violations.append(JacobiViolation(i, j, k, residual))
        return violations

    # -- subspace machinery -------------------------------------------------

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def bracket_span(self, u: Subspace, v: Subspace) -> Subspace:
        """Span of [a, b] over basis vectors a of u, b of v."""
        if u.ambient != self.dim or v.ambient != self.dim:
            raise ValueError("subspace ambient dimension must match the algebra")
        vecs = [self.bracket(a, b) for a in u.basis_rows() for b in v.basis_rows()]
        return Subspace.span(self.field, self.dim, vecs)

    def derived_subalgebra(self) -> Subspace:
        full = self.full_space()
        return self.bracket_span(full, full)

    def center(self) -> Subspace:
        """Kernel of the stacked adjoint equations sum_i z_i c_{ij}^k = 0."""
        n = self.dim
        zero = self.field.zero
        rows: dict[tuple[int, int], list] = {}

        def row_for(key):
            if key not in rows:
                rows[key] = [zero] * n
            return rows[key]

        for (a, b), vec in self.table.items():
            for k, coef in enumerate(vec):
                if not coef:
                    continue
                r = row_for((b, k))
                r[a] = r[a] + coef
                r = row_for((a, k))
                r[b] = r[b] - coef
        if not rows:
            return self.full_space()
        eqs = Matrix(self.field, [rows[key] for key in sorted(rows)], cols=n)
        return kernel(eqs)

    def series(self) -> "SeriesReport":
        """Lower central series, derived series, center, nilpotency class."""
        full = self.full_space()
        lower = [full]
        while True:
            nxt = self.bracket_span(lower[-1], full)
            if nxt.dim == lower[-1].dim:
                break  # stabilized; nilpotent only if already zero
            lower.append(nxt)
            if nxt.dim == 0:
                break
        nilpotent = lower[-1].dim == 0 or self.dim == 0
        cls = len(lower) - 1 if nilpotent else None
        derived = [full]
        while True:
            nxt = self.bracket_span(derived[-1], derived[-1])
            if nxt.dim == derived[-1].dim:
                break
            derived.append(nxt)
            if nxt.dim == 0:
                break
        return SeriesReport(tuple(lower), tuple(derived), self.center(), cls)

    # -- constructions --------------------------------------------------------

    def quotient(self, ideal: Subspace) -> tuple["LieAlgebra", Matrix]:
        """Quotient by an ideal, with the coordinate projection matrix.

        The quotient basis is the non-pivot coordinates of the ideal's RREF
        basis, which makes the construction deterministic.  Returns (L/I, P)
        where P is dim x quot_dim and row-vector coordinates map by v @ P.
        """
        if ideal.ambient != self.dim:
            raise ValueError("ideal ambient dimension must match the algebra")
        if not ideal.contains_subspace(self.bracket_span(self.full_space(), ideal)):
            raise ValueError("subspace is not an ideal")
        pivot_set = set(ideal.pivots)
        keep = [j for j in range(self.dim) if j not in pivot_set]
        q = len(keep)

        def project(vec):
            residual = ideal.reduce(vec)
            return tuple(residual[j] for j in keep)

        table = {}
        for a_pos, a in enumerate(keep):
            for b_pos in range(a_pos + 1, q):
                w = project(self.structure_vector(a, keep[b_pos]))
                if any(w):
                    table[(a_pos, b_pos)] = w
        proj_rows = [project(self.basis_vector(i)) for i in range(self.dim)]
        proj = Matrix(self.field, proj_rows, cols=q)
        labels = tuple(self.labels[j] for j in keep)
        return LieAlgebra(self.field, q, table, labels), proj

    def change_basis(self, p: Matrix) -> "LieAlgebra":
        """Conjugate the table: row i of p is the i-th new basis vector."""
        if p.field != self.field:
            raise ValueError("field mismatch")
        if p.shape != (self.dim, self.dim):
            raise ValueError("basis change must be square of matching size")
        pinv = invert(p)  # raises on singular input
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                old = self.bracket(p.row(i), p.row(j))
                new = Matrix(self.field, [old], cols=self.dim) @ pinv
                vec = new.row(0)
                if any(vec):
                    table[(i, j)] = vec
        return LieAlgebra(self.field, self.dim, table)


@dataclass(frozen=True)
class SeriesReport:
    lower_central: tuple[Subspace, ...]
    derived_series: tuple[Subspace, ...]
    center: Subspace
    nilpotency_class: int | None  # None marks a non-nilpotent algebra

    @property
    def is_nilpotent(self) -> bool:
        return self.nilpotency_class is not None

    @property
    def derived_dim(self) -> int:
        """dim L^2 (zero for abelian algebras)."""
        if len(self.lower_central) > 1:
            return self.lower_central[1].dim
        return 0

    def lower_central_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.lower_central)

    def derived_series_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.derived_series)


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block direct sum; summands keep their brackets and do not interact."""
    if a.field != b.field:
        raise ValueError("direct sum requires a common field")
    n = a.dim + b.dim
    zero = a.field.zero
    table = {}
    for (i, j), vec in a.table.items():
        table[(i, j)] = tuple(vec) + (zero,) * b.dim
    for (i, j), vec in b.table.items():
        table[(a.dim + i, a.dim + j)] = (zero,) * a.dim + tuple(vec)
    return LieAlgebra(a.field, n, table)


def abelian(field: FieldSpec, n: int) -> LieAlgebra:
    return LieAlgebra(field, n)


def reduce_mod_p(L: LieAlgebra, p: int) -> LieAlgebra:
    """Reduce a rational structure table mod p.

    Requires every coefficient denominator to be a unit mod p.  The result
    satisfies Jacobi automatically (residuals reduce to zero), but series
    dimensions can differ from the rational ones when coefficients vanish
    mod p; callers interpret the reduction in its own field.
    """
    if L.field.is_prime_field:
        raise ValueError("algebra is already over a prime field")
    target = FieldSpec(p)
    table = {}
    for key, vec in L.table.items():
        row = []
        for x in vec:
            if x.denominator % p == 0:
                raise ValueError(f"coefficient {x} has denominator divisible by {p}")
            row.append(target.of(x.numerator) / target.of(x.denominator))
        table[key] = row
    return LieAlgebra(target, L.dim, table, L.labels)
