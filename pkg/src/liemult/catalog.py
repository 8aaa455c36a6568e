"""Constructors for the named small nilpotent Lie algebras.

Bracket tables (1-based generator indices, all other pairs zero):

    A(n)            abelian, no brackets
    H(m)            [x1,x2] = ... = [x_{2m-1},x_{2m}] = x_{2m+1}
    L4_3            [x1,x2] = x3,  [x1,x3] = x4
    L5_5            [x1,x2] = x3,  [x1,x3] = x5,  [x2,x4] = x5
    L5_8            [x1,x2] = x4,  [x1,x3] = x5
    L6_22(eps)      [x1,x2] = x5 = [x3,x4],  [x1,x3] = x6,  [x2,x4] = eps*x6
                    (characteristic != 2)
    L6_7_2(eta)     [x1,x2] = x5,  [x3,x4] = x5+x6,  [x1,x3] = x6,
                    [x2,x4] = eta*x6   (characteristic 2, eta in {0,1})
    L1              [x1,x2] = x6 = [x3,x4],  [x1,x5] = x7 = [x2,x3]

`make_catalog` appends an abelian summand A(k) after the core generators.
The two open-ended classification verdicts (rank-2 generalized Heisenberg,
class-3 stem of derived dimension 2) are family names only and cannot be
constructed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .algebra import LieAlgebra, direct_sum, abelian
from .fields import FieldSpec, Scalar


class Family(str, Enum):
    ABELIAN = "A"
    HEISENBERG = "H"
    L4_3 = "L4_3"
    L5_5 = "L5_5"
    L5_8 = "L5_8"
    L6_22 = "L6_22"
    L6_7_2 = "L6_7_2"
    L1 = "L1"
    GEN_HEISENBERG_RANK2 = "gen_heisenberg_rank2"
    STEM_CLASS3_DIM2 = "stem_class3_dim2"


#: families make_catalog can build, in CLI listing order
CONSTRUCTIBLE = (
    Family.ABELIAN,
    Family.HEISENBERG,
    Family.L4_3,
    Family.L5_5,
    Family.L5_8,
    Family.L6_22,
    Family.L6_7_2,
    Family.L1,
)

_BASE_DIM = {
    Family.L4_3: 4,
    Family.L5_5: 5,
    Family.L5_8: 5,
    Family.L6_22: 6,
    Family.L6_7_2: 6,
    Family.L1: 7,
}


@dataclass(frozen=True)
class CatalogId:
    family: Family
    rank: int | None = None  # Heisenberg rank m
    param: Scalar | int | None = None  # eps for L6_22, eta for L6_7_2
    abelian: int = 0  # appended abelian summand A(k); total dim for ABELIAN

    def base_dim(self) -> int:
        if self.family is Family.ABELIAN:
            return 0
        if self.family is Family.HEISENBERG:
            if self.rank is None or self.rank < 1:
                raise ValueError("Heisenberg rank m >= 1 required")
            return 2 * self.rank + 1
        try:
            return _BASE_DIM[self.family]
        except KeyError:
            raise ValueError(f"family {self.family.value} has no fixed presentation")

    def total_dim(self) -> int:
        return self.base_dim() + self.abelian


def _unit(field: FieldSpec, n: int, k: int, scale=None) -> tuple:
    zero = field.zero
    s = field.one if scale is None else field.of(scale)
    return tuple(s if i == k else zero for i in range(n))


def _core_table(id: CatalogId, field: FieldSpec, n: int) -> dict:
    fam = id.family
    if fam is Family.ABELIAN:
        return {}
    if fam is Family.HEISENBERG:
        m = id.rank
        return {(2 * i, 2 * i + 1): _unit(field, n, 2 * m) for i in range(m)}
    if fam is Family.L4_3:
        return {(0, 1): _unit(field, n, 2), (0, 2): _unit(field, n, 3)}
    if fam is Family.L5_5:
        return {
            (0, 1): _unit(field, n, 2),
            (0, 2): _unit(field, n, 4),
            (1, 3): _unit(field, n, 4),
        }
    if fam is Family.L5_8:
        return {(0, 1): _unit(field, n, 3), (0, 2): _unit(field, n, 4)}
    if fam is Family.L6_22:
        if field.char == 2:
            raise ValueError("L6_22 requires characteristic != 2")
        eps = field.of(id.param if id.param is not None else 1)
        return {
            (0, 1): _unit(field, n, 4),
            (2, 3): _unit(field, n, 4),
            (0, 2): _unit(field, n, 5),
            (1, 3): _unit(field, n, 5, eps),
        }
    if fam is Family.L6_7_2:
        if field.char != 2:
            raise ValueError("L6_7_2 requires characteristic 2")
        eta = field.of(id.param if id.param is not None else 0)
        zero, one = field.zero, field.one
        x5_plus_x6 = tuple(
            one if i in (4, 5) else zero for i in range(n)
        )
        return {
            (0, 1): _unit(field, n, 4),
            (2, 3): x5_plus_x6,
            (0, 2): _unit(field, n, 5),
            (1, 3): _unit(field, n, 5, eta),
        }
    if fam is Family.L1:
        return {
            (0, 1): _unit(field, n, 5),
            (2, 3): _unit(field, n, 5),
            (0, 4): _unit(field, n, 6),
            (1, 2): _unit(field, n, 6),
        }
    raise ValueError(f"family {fam.value} has no fixed presentation")


def make_catalog(id: CatalogId, field: FieldSpec) -> LieAlgebra:
    """Build the named algebra plus its abelian summand over the given field."""
    if id.abelian < 0:
        raise ValueError("abelian summand must be >= 0")
    base = id.base_dim()
    core = LieAlgebra(field, base, _core_table(id, field, base))
    if id.abelian == 0:
        return core
    return direct_sum(core, abelian(field, id.abelian))


def heisenberg(field: FieldSpec, m: int, extra_abelian: int = 0) -> LieAlgebra:
    return make_catalog(CatalogId(Family.HEISENBERG, rank=m, abelian=extra_abelian), field)
