"""Character computations for S_n, H_{m,n}(q,Q) and W_{m,n}.

The Hecke table is obtained by expanding the trace identity in supersymmetric
functions on the solve profile k_i = n, l_i = 0: there every multipartition is
a hook, the super Schur functions degenerate to products of ordinary Schur
polynomials with integer monomial coordinates, and the character values drop
out of one exact linear solve per column.  Specializing q -> 1, Q_i -> zeta^i
turns the result into the character table of the wreath product W_{m,n}.

The same wreath table is recomputed independently from the colored power sum
expansion of the super Schur functions; agreement of the two routes is one of
the package's cross-checks.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from superfrob.combinat import (
    HookProfile,
    Multipartition,
    Partition,
    centralizer_order_wreath,
    multipartitions,
    standard_multitableaux_count,
)
from superfrob.exact import CyclotomicNumber, Poly, solve_linear_exact
from superfrob.symfunc import (
    BlockVariables,
    ConsistencyError,
    colored_power_sum_product,
    coordinates_on_degree,
    q_bmu,
    super_schur,
)

# -- Murnaghan-Nakayama --------------------------------------------------------


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible S_n character chi^lam at cycle type mu, by border-strip recursion."""
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes differ")
    if not mu:
        return 1
    strip = mu[0]
    rest = tuple(mu[1:])
    length = len(lam)
    # first-column hook lengths ("beta numbers"); strips of size `strip`
    # correspond to moves b -> b - strip landing on a free value
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - strip
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted((occupied - {b}) | {target}, reverse=True)
        new_lam = tuple(
            x - (length - 1 - i) for i, x in enumerate(new_beta)
        )
        new_lam = tuple(p for p in new_lam if p > 0)
        value = mn_character(new_lam, rest)
        total += -value if height % 2 else value
    return total


def mn_table(n: int) -> list[list[int]]:
    """Full S_n character table, rows and columns in partition order."""
    parts = [p[0] for p in multipartitions(1, n)]
    return [[mn_character(lam, mu) for mu in parts] for lam in parts]


# -- character tables -----------------------------------------------------------


@dataclass
class CharacterTable:
    """Square table of character values, rows bl and columns bmu in canonical order.

    Generic entries are Laurent polynomials in q with coefficients polynomial
    in Q_1..Q_m; specialized entries are cyclotomic numbers.  The observed
    trivial row (all ones after specialization) is recorded because the paper
    fixes the labeling only through the super Schur functions.
    """

    m: int
    n: int
    rows: tuple[Multipartition, ...]
    cols: tuple[Multipartition, ...]
    entries: list
    solve_profile: HookProfile
    specialized: bool
    trivial_row_index: int | None

    def row_index(self, bshape: Multipartition) -> int:
        return self.rows.index(bshape)

    def col_index(self, bmu: Multipartition) -> int:
        return self.cols.index(bmu)

    def entry(self, bshape: Multipartition, bmu: Multipartition):
        return self.entries[self.row_index(bshape)][self.col_index(bmu)]

    def identity_column_index(self) -> int:
        """Column of the identity element: all parts 1 in the last component."""
        identity_type = ((),) * (self.m - 1) + (((1,) * self.n) if self.n else (),)
        return self.cols.index(identity_type)


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("SUPERFROB_THREADS", "1")))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    cap = min(_thread_cap(), len(items)) if items else 1
    if cap <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=cap) as pool:
        return list(pool.map(fn, items))


def solve_block(m: int, n: int) -> BlockVariables:
    """The solve-profile block: k_i = n, l_i = 0 for every color."""
    return BlockVariables(HookProfile((n,) * m, (0,) * m))


def _schur_coordinate_matrix(block: BlockVariables, rows, n: int):
    x_names = block.x_names()
    columns = []
    for bshape in rows:
        coords = coordinates_on_degree(super_schur(bshape, block), x_names, n)
        columns.append([c.constant_value() for c in coords])
    height = len(columns[0])
    return [[columns[j][r] for j in range(len(rows))] for r in range(height)]


def hecke_character_table(m: int, n: int) -> CharacterTable:
    """Character table of H_{m,n}(q,Q) on the standard elements g(bmu).

    For each column the expansion of q_bmu over the super Schur basis is
    solved exactly; held-out monomial rows are residual-checked inside the
    solver, and entries are verified to be integer Laurent polynomials.
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    block = solve_block(m, n)
    labels = multipartitions(m, n)
    matrix = _schur_coordinate_matrix(block, labels, n)
    x_names = block.x_names()

    def column(bmu: Multipartition) -> list[Poly]:
        rhs = coordinates_on_degree(q_bmu(bmu, block), x_names, n)
        values = solve_linear_exact(matrix, rhs)
        for bshape, value in zip(labels, values):
            for coeff in value.terms.values():
                if isinstance(coeff, Fraction) and coeff.denominator != 1:
                    raise ConsistencyError(
                        f"non-integer character value for {bshape} at {bmu}: {value!r}"
                    )
        return values

    columns = _map_ordered(column, list(labels))
    entries = [
        [columns[c][r] for c in range(len(labels))] for r in range(len(labels))
    ]
    table = CharacterTable(
        m=m,
        n=n,
        rows=labels,
        cols=labels,
        entries=entries,
        solve_profile=block.profile,
        specialized=False,
        trivial_row_index=None,
    )
    table.trivial_row_index = _find_trivial_row(table)
    return table


def _specialize_entry(entry: Poly, m: int) -> CyclotomicNumber:
    assignment = {"q": Fraction(1)}
    for i in range(1, m + 1):
        assignment[f"Q{i}"] = CyclotomicNumber.zeta(m, i)
    value = entry.substitute(assignment).constant_value()
    if isinstance(value, Fraction):
        value = CyclotomicNumber.from_rational(m, value)
    return value


def specialize_table(table: CharacterTable) -> CharacterTable:
    """Entrywise q -> 1, Q_i -> zeta^i: the character table of W_{m,n}."""
    if table.specialized:
        return table
    entries = [
        [_specialize_entry(value, table.m) for value in row] for row in table.entries
    ]
    out = CharacterTable(
        m=table.m,
        n=table.n,
        rows=table.rows,
        cols=table.cols,
        entries=entries,
        solve_profile=table.solve_profile,
        specialized=True,
        trivial_row_index=None,
    )
    out.trivial_row_index = _find_trivial_row(out)
    return out


def _find_trivial_row(table: CharacterTable) -> int | None:
    specialized = table if table.specialized else None
    if specialized is None:
        specialized = specialize_table(table)
    one = CyclotomicNumber.from_rational(table.m, 1)
    for index, row in enumerate(specialized.entries):
        if all(value == one for value in row):
            return index
    return None


@lru_cache(maxsize=None)
def wreath_character_table(m: int, n: int) -> CharacterTable:
    """W_{m,n} character table from the colored power sum expansion.

    Solves S_bl = sum_bmu Z_bmu^-1 chi^bl(bmu) P_bmu in monomial coordinates,
    with the centralizer orders cleared by a common multiple before the solve
    so the system matrix stays integral (over Z[zeta]).
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    block = solve_block(m, n)
    labels = multipartitions(m, n)
    x_names = block.x_names()
    orders = [centralizer_order_wreath(bmu, m) for bmu in labels]
    common = math.lcm(*orders)

    matrix_columns = []
    for bmu, order in zip(labels, orders):
        coords = coordinates_on_degree(colored_power_sum_product(bmu, block), x_names, n)
        scale = Fraction(common, order)
        matrix_columns.append(
            [_as_cyclotomic(c.constant_value(), m) * scale for c in coords]
        )
    height = len(matrix_columns[0])
    matrix = [
        [matrix_columns[j][r] for j in range(len(labels))] for r in range(height)
    ]

    def row_for(bshape: Multipartition) -> list[CyclotomicNumber]:
        coords = coordinates_on_degree(super_schur(bshape, block), x_names, n)
        rhs = [_as_cyclotomic(c.constant_value(), m) * common for c in coords]
        return solve_linear_exact(matrix, rhs)

    entries = _map_ordered(row_for, list(labels))
    table = CharacterTable(
        m=m,
        n=n,
        rows=labels,
        cols=labels,
        entries=entries,
        solve_profile=block.profile,
        specialized=True,
        trivial_row_index=None,
    )
    table.trivial_row_index = _find_trivial_row(table)
    return table


def _as_cyclotomic(value, m: int) -> CyclotomicNumber:
    if isinstance(value, CyclotomicNumber):
        return value
    return CyclotomicNumber.from_rational(m, value)


def wreath_character(bshape: Multipartition, bmu: Multipartition, m: int) -> CyclotomicNumber:
    n = sum(sum(c) for c in bshape)
    if sum(sum(c) for c in bmu) != n:
        raise ValueError("partition sizes differ")
    table = wreath_character_table(m, n)
    return table.entry(bshape, bmu)


# -- orthogonality audits --------------------------------------------------------


@dataclass
class OrthogonalityReport:
    passed: bool
    pairs_checked: int
    violations: list


def verify_orthogonality(table: CharacterTable) -> OrthogonalityReport:
    """First (row) orthogonality with weights 1/Z_bmu and conjugated second factor."""
    if not table.specialized:
        raise ValueError("orthogonality is audited on the specialized table")
    weights = [
        Fraction(1, centralizer_order_wreath(bmu, table.m)) for bmu in table.cols
    ]
    violations = []
    pairs = 0
    for r1, row1 in enumerate(table.entries):
        for r2, row2 in enumerate(table.entries):
            pairs += 1
            total = CyclotomicNumber.from_rational(table.m, 0)
            for value1, value2, weight in zip(row1, row2, weights):
                total = total + weight * (value1 * value2.conjugate())
            expected = CyclotomicNumber.from_rational(table.m, 1 if r1 == r2 else 0)
            if total != expected:
                violations.append((table.rows[r1], table.rows[r2], total))
    return OrthogonalityReport(not violations, pairs, violations)


def verify_column_orthogonality(table: CharacterTable) -> OrthogonalityReport:
    """Second orthogonality: column sums equal delta times the centralizer order."""
    if not table.specialized:
        raise ValueError("orthogonality is audited on the specialized table")
    violations = []
    pairs = 0
    for c1 in range(len(table.cols)):
        for c2 in range(len(table.cols)):
            pairs += 1
            total = CyclotomicNumber.from_rational(table.m, 0)
            for row in table.entries:
                total = total + row[c1] * row[c2].conjugate()
            expected = CyclotomicNumber.from_rational(
                table.m,
                centralizer_order_wreath(table.cols[c1], table.m) if c1 == c2 else 0,
            )
            if total != expected:
                violations.append((table.cols[c1], table.cols[c2], total))
    return OrthogonalityReport(not violations, pairs, violations)


def character_degrees(table: CharacterTable) -> list:
    """The identity-column entries (character degrees once specialized)."""
    column = table.identity_column_index()
    return [row[column] for row in table.entries]


def degrees_match_counts(table: CharacterTable) -> bool:
    degrees = character_degrees(table)
    for bshape, degree in zip(table.rows, degrees):
        expected = standard_multitableaux_count(bshape)
        if degree != expected:
            return False
    return True
