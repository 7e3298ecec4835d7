"""Aggregated invariants of one family and the published h^i(O_Y) table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cohomology import (
    FamilyParams,
    HodgeVector,
    Kodaira,
    betti,
    canonical_degree,
    h1,
    h2,
    hodge_vector,
    kodaira,
)
from .hrr import ObstructionInput, Verdict, w2_verdict

# h^0(O_Y), ..., h^n(O_Y) for d = 1 and n = p - 2, as published
PUBLISHED_HODGE_TABLE: dict[int, tuple[int, ...]] = {
    2: (1,),
    3: (1, 2),
    5: (1, 4, 52, 68),
    7: (1, 6, 786, 1251, 6891, 7872),
    11: (
        1, 10, 167950, 293830, 18480520, 25109950,
        251849140, 296659645, 859743835, 905642810,
    ),
    13: (
        1, 12, 2496132, 4457256, 825038490, 1149834280, 27258578260,
        33480335274, 223425722070, 250522227132, 616161367152,
        639330337978,
    ),
}


@dataclass(frozen=True)
class TableRow:
    p: int
    n: int
    dim: int
    published: tuple[int, ...]
    computed: tuple[int, ...]

    @property
    def matches(self) -> tuple[bool, ...]:
        return tuple(a == b for a, b in zip(self.published, self.computed))

    @property
    def all_match(self) -> bool:
        return len(self.published) == len(self.computed) and all(self.matches)


def reproduce_table() -> list[TableRow]:
    rows = []
    for p, published in PUBLISHED_HODGE_TABLE.items():
        n = p - 2
        computed = hodge_vector(n, p).values[: n + 1]
        rows.append(TableRow(p, n, 2 * n + 1, published, computed))
    return rows


@dataclass(frozen=True)
class InvariantReport:
    params: FamilyParams
    m: int
    omega_trivial: bool
    kodaira: Kodaira
    h1: int
    h2: Optional[int]
    b1: int
    b2: int
    b_middle: int
    hodge: Optional[HodgeVector]
    verdict: Verdict

    @property
    def dim(self) -> int:
        return self.params.dim

    @property
    def g(self) -> int:
        return self.params.g


def invariants(fp: FamilyParams) -> InvariantReport:
    n, d, p = fp.n, fp.d, fp.p
    m = canonical_degree(fp)
    # the lattice-point descriptions of h^2 and of the Hodge vector are for d = 1
    hv = hodge_vector(n, p) if d == 1 and p >= n + 1 else None
    return InvariantReport(
        params=fp,
        m=m,
        omega_trivial=m == 0,
        kodaira=kodaira(fp),
        h1=h1(n, d),
        h2=h2(n, p) if d == 1 else None,
        b1=betti(n, 1),
        b2=betti(n, 2),
        b_middle=betti(n, 2 * n + 1),
        hodge=hv,
        verdict=w2_verdict(ObstructionInput(fp)),
    )
