"""Symmetric and supersymmetric function expansions.

Everything here expands into exact sparse polynomials over a block-variable
registry: per color i there are k_i even variables x{i}_a and l_i odd
variables y{i}_b, plus the Hecke parameters q (invertible) and Q_1..Q_m.
Colored power sums carry cyclotomic coefficients.

Hall-Littlewood functions are computed by one mechanism only: truncated power
series in an auxiliary expansion variable u (represented as coefficient
lists, never as a registered variable), exactly following their generating
functions.  The deformation parameter t is passed in as a first-class
polynomial, so callers can keep it symbolic or set it to q^-2.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from superfrob.combinat import (
    HookProfile,
    Multipartition,
    Partition,
    compositions,
    conjugate,
    contains,
    partitions,
    sub_partitions,
    super_tableaux,
    semistandard_tableaux,
)
from superfrob.exact import (
    CyclotomicNumber,
    DomainError,
    Poly,
    StructuralError,
    Variable,
    VariableRegistry,
)


class ConsistencyError(ArithmeticError):
    """An identity that must hold symbolically failed to hold."""


class ShapeError(ValueError):
    """A (skew) shape constraint was violated."""


class BlockVariables:
    """Registered block variables for a hook profile.

    Registry layout (fixes exponent vectors and the canonical term order):
    q, Q_1..Q_m, all x variables color-major, all y variables color-major,
    then any extra names (e.g. the Hall-Littlewood parameter ``t``).
    """

    def __init__(self, profile: HookProfile, extra: tuple[str, ...] = ()):
        self.profile = profile
        m = profile.m
        variables = [Variable("q", invertible=True)]
        variables += [Variable(f"Q{i}") for i in range(1, m + 1)]
        for i in range(1, m + 1):
            variables += [
                Variable(f"x{i}_{a}", color=i) for a in range(1, profile.bk[i - 1] + 1)
            ]
        for i in range(1, m + 1):
            variables += [
                Variable(f"y{i}_{b}", color=i) for b in range(1, profile.bl[i - 1] + 1)
            ]
        variables += [Variable(name) for name in extra]
        self.registry = VariableRegistry(variables)
        self.q = Poly.var(self.registry, "q")
        self.q_inv = Poly.var(self.registry, "q", -1)
        self.q_minus_q_inv = self.q - self.q_inv

    @property
    def m(self) -> int:
        return self.profile.m

    def Q(self, i: int, power: int = 1) -> Poly:
        return Poly.var(self.registry, f"Q{i}", power)

    def x_polys(self, color: int) -> list[Poly]:
        return [
            Poly.var(self.registry, f"x{color}_{a}")
            for a in range(1, self.profile.bk[color - 1] + 1)
        ]

    def y_polys(self, color: int) -> list[Poly]:
        return [
            Poly.var(self.registry, f"y{color}_{b}")
            for b in range(1, self.profile.bl[color - 1] + 1)
        ]

    def x_names(self) -> list[str]:
        return [
            f"x{i}_{a}"
            for i in range(1, self.m + 1)
            for a in range(1, self.profile.bk[i - 1] + 1)
        ]

    def y_names(self) -> list[str]:
        return [
            f"y{i}_{b}"
            for i in range(1, self.m + 1)
            for b in range(1, self.profile.bl[i - 1] + 1)
        ]

    def variable_of_index(self, index: int) -> Poly:
        """The block variable carried by a global basis index (no sign)."""
        kind, color, pos = self.profile.symbol_of(index)
        return Poly.var(self.registry, f"{kind}{color}_{pos}")

    def diagonal_weight(self, index: int) -> Poly:
        """x for even indices, -y for odd ones (the z -> x / -y replacement)."""
        kind, color, pos = self.profile.symbol_of(index)
        var = Poly.var(self.registry, f"{kind}{color}_{pos}")
        return var if kind == "x" else -var

    def zero(self) -> Poly:
        return Poly.zero(self.registry)

    def one(self) -> Poly:
        return Poly.one(self.registry)


# -- classical bases ----------------------------------------------------------


def schur(shape: Partition, variables: list[Poly]) -> Poly:
    """Schur polynomial as a semistandard-tableau sum; zero when the shape is too tall."""
    if not variables:
        raise StructuralError("schur needs at least one variable; use _schur_in for empty blocks")
    registry = variables[0].registry
    if len(shape) > len(variables):
        return Poly.zero(registry)
    positions = []
    for v in variables:
        (exps,) = v.terms.keys()
        positions.append(max(range(len(exps)), key=lambda p: exps[p]))
    width = len(registry)
    terms: dict[tuple[int, ...], Fraction] = {}
    for tab in semistandard_tableaux(shape, len(variables)):
        exps = [0] * width
        for row in tab:
            for value in row:
                exps[positions[value - 1]] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + 1
    return Poly(registry, terms)


def _schur_in(registry: VariableRegistry, shape: Partition, variables: list[Poly]) -> Poly:
    if not variables:
        return Poly.one(registry) if not shape else Poly.zero(registry)
    return schur(shape, variables)


def lr_coefficient(theta: Partition, nu: Partition, eta: Partition) -> int:
    """Littlewood-Richardson coefficient c^eta_{theta,nu} by lattice-word enumeration."""
    if not contains(eta, theta):
        return 0
    if sum(theta) + sum(nu) != sum(eta):
        return 0
    inner = tuple(theta) + (0,) * (len(eta) - len(theta))
    boxes = [(i, j) for i, row in enumerate(eta) for j in range(inner[i], row)]
    if not boxes:
        return 1 if not nu else 0
    nu_counts = list(nu)

    grid: dict[tuple[int, int], int] = {}
    remaining = list(nu_counts)

    count = 0

    def lattice_ok() -> bool:
        seen = [0] * len(nu_counts)
        for i in range(len(eta)):
            for j in range(eta[i] - 1, inner[i] - 1, -1):
                v = grid[(i, j)] - 1
                seen[v] += 1
                if v > 0 and seen[v] > seen[v - 1]:
                    return False
        return True

    def fill(cell: int):
        nonlocal count
        if cell == len(boxes):
            if lattice_ok():
                count += 1
            return
        i, j = boxes[cell]
        lo = 1
        if (i, j - 1) in grid:
            lo = max(lo, grid[(i, j - 1)])
        if (i - 1, j) in grid:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, len(nu_counts) + 1):
            if remaining[v - 1] == 0:
                continue
            grid[(i, j)] = v
            remaining[v - 1] -= 1
            fill(cell + 1)
            remaining[v - 1] += 1
            del grid[(i, j)]

    fill(0)
    return count


def skew_schur(eta: Partition, theta: Partition, variables: list[Poly], registry=None) -> Poly:
    """S_{eta/theta} = sum_nu c^eta_{theta,nu} S_nu, per the Littlewood-Richardson rule."""
    if not contains(eta, theta):
        raise ShapeError(f"{theta} is not contained in {eta}")
    if registry is None:
        if not variables:
            raise StructuralError("skew_schur with no variables needs an explicit registry")
        registry = variables[0].registry
    total = Poly.zero(registry)
    size = sum(eta) - sum(theta)
    for nu in partitions(size):
        if len(nu) > len(variables):
            continue
        c = lr_coefficient(theta, nu, eta)
        if c:
            total = total + c * _schur_in(registry, nu, variables)
    return total


def power_sum(a: int, variables: list[Poly], registry=None) -> Poly:
    if registry is None:
        registry = variables[0].registry
    if a == 0:
        return Poly.one(registry)
    total = Poly.zero(registry)
    for v in variables:
        total = total + v**a
    return total


def super_power_sum(a: int, x_vars: list[Poly], y_vars: list[Poly], registry) -> Poly:
    """p_a(x/y) = p_a(x) - p_a(y) for a >= 1, and p_0 = 1."""
    if a == 0:
        return Poly.one(registry)
    return power_sum(a, x_vars, registry) - power_sum(a, y_vars, registry)


def super_power_sum_product(shape: Partition, x_vars, y_vars, registry) -> Poly:
    total = Poly.one(registry)
    for part in shape:
        total = total * super_power_sum(part, x_vars, y_vars, registry)
    return total


def complete_homogeneous(a: int, variables: list[Poly], registry=None) -> Poly:
    """h_a by monomial enumeration (used as an independent degeneration check)."""
    if registry is None:
        registry = variables[0].registry
    if a == 0:
        return Poly.one(registry)
    total = Poly.zero(registry)
    for combo in itertools.combinations_with_replacement(variables, a):
        term = Poly.one(registry)
        for v in combo:
            term = term * v
        total = total + term
    return total


# -- Hall-Littlewood via generating series ------------------------------------


def _series_mul(a: list[Poly], b: list[Poly], order: int, registry) -> list[Poly]:
    out = [Poly.zero(registry) for _ in range(order + 1)]
    for i, ai in enumerate(a):
        if i > order or ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def hl_series(
    x_vars: list[Poly], y_vars: list[Poly], t: Poly, order: int, registry
) -> list[Poly]:
    """Coefficients of u^0..u^order of prod (1-x t u)/(1-x u) * prod (1-y u)/(1-y t u)."""
    one = Poly.one(registry)
    zero = Poly.zero(registry)
    series = [one] + [zero] * order
    for x in x_vars:
        series = _series_mul(series, [one, -(x * t)], order, registry)
        geo = [one]
        for _ in range(order):
            geo.append(geo[-1] * x)
        series = _series_mul(series, geo, order, registry)
    for y in y_vars:
        series = _series_mul(series, [one, -y], order, registry)
        yt = y * t
        geo = [one]
        for _ in range(order):
            geo.append(geo[-1] * yt)
        series = _series_mul(series, geo, order, registry)
    return series


def hall_littlewood_q(a: int, x_vars: list[Poly], t: Poly, registry=None) -> Poly:
    """q_a(x;t): coefficient of u^a in prod_i (1-x_i t u)/(1-x_i u)."""
    if registry is None:
        registry = t.registry if isinstance(t, Poly) else x_vars[0].registry
    if not isinstance(t, Poly):
        t = Poly.const(registry, t)
    return hl_series(x_vars, [], t, a, registry)[a]


def super_hall_littlewood_q(
    a: int, x_vars: list[Poly], y_vars: list[Poly], t: Poly, registry=None
) -> Poly:
    """q_a(x/y;t): coefficient of u^a in the mixed product generating function."""
    if registry is None:
        registry = t.registry if isinstance(t, Poly) else (x_vars + y_vars)[0].registry
    if not isinstance(t, Poly):
        t = Poly.const(registry, t)
    return hl_series(x_vars, y_vars, t, a, registry)[a]


def reversed_in_variable(f: Poly, name: str, degree: int) -> Poly:
    """Substitute t -> t^-1 and multiply through by t^degree, as exponent reversal.

    Requires deg_t(f) <= degree; used to state the super Hall-Littlewood
    decomposition without Laurent exponents in t.
    """
    pos = f.registry.index(name)
    terms = {}
    for exps, coeff in f.terms.items():
        if exps[pos] > degree:
            raise DomainError(f"degree in {name} exceeds reversal degree {degree}")
        new = list(exps)
        new[pos] = degree - exps[pos]
        terms[tuple(new)] = coeff
    return Poly(f.registry, terms)


def super_hall_littlewood_q_via_decomposition(
    a: int, x_vars: list[Poly], y_vars: list[Poly], t_name: str, registry
) -> Poly:
    """The displayed decomposition sum_i t^(a-i) q_i(x;t) q_{a-i}(y;t^-1).

    Each factor t^(a-i) q_{a-i}(y;t^-1) is realised as the exponent reversal of
    q_{a-i}(y;t), which multiplies the identity through by a sufficient power
    of t; the result is polynomial in t and must equal the generating-series
    value.
    """
    t = Poly.var(registry, t_name)
    total = Poly.zero(registry)
    for i in range(a + 1):
        qx = hall_littlewood_q(i, x_vars, t, registry)
        qy = hall_littlewood_q(a - i, y_vars, t, registry)
        total = total + qx * reversed_in_variable(qy, t_name, a - i)
    return total


# -- supersymmetric Schur functions -------------------------------------------


def super_schur_component(
    shape: Partition, block: BlockVariables, color: int, algorithm: str = "alternating"
) -> Poly:
    """S_shape(x^(color)/y^(color)) by one of the two independent algorithms.

    "alternating": sum over mu inside shape of (-1)^(boxes left) S_mu(x)
    S_{shape'/mu'}(y).  "tableau": sum of super-tableau weights with -y for
    odd boxes.  Both vanish exactly off the (k_color, l_color) hook.
    """
    registry = block.registry
    x_vars = block.x_polys(color)
    y_vars = block.y_polys(color)
    if algorithm == "alternating":
        total = Poly.zero(registry)
        shape_conj = conjugate(shape)
        for mu in sub_partitions(shape):
            if len(mu) > len(x_vars):
                continue
            sx = _schur_in(registry, mu, x_vars)
            if sx.is_zero():
                continue
            sy = skew_schur(shape_conj, conjugate(mu), y_vars, registry)
            if sy.is_zero():
                continue
            sign = -1 if (sum(shape) - sum(mu)) % 2 else 1
            total = total + sign * (sx * sy)
        return total
    if algorithm == "tableau":
        k = len(x_vars)
        ell = len(y_vars)
        width = len(registry)
        terms: dict[tuple[int, ...], Fraction] = {}
        x_pos = [registry.index(f"x{color}_{a}") for a in range(1, k + 1)]
        y_pos = [registry.index(f"y{color}_{b}") for b in range(1, ell + 1)]
        for tab in super_tableaux(shape, k, ell):
            exps = [0] * width
            boxes_y = 0
            for row in tab.x_filling:
                for value in row:
                    exps[x_pos[value - 1]] += 1
            for row in tab.y_filling:
                for value in row:
                    exps[y_pos[value - 1]] += 1
                    boxes_y += 1
            key = tuple(exps)
            sign = Fraction(-1 if boxes_y % 2 else 1)
            terms[key] = terms.get(key, Fraction(0)) + sign
        return Poly(block.registry, {e: c for e, c in terms.items() if c})
    raise ValueError(f"unknown algorithm {algorithm!r}")


def super_schur(
    bshape: Multipartition, block: BlockVariables, algorithm: str = "alternating"
) -> Poly:
    """S_bshape(x/y) as the product of per-color supersymmetric Schur functions."""
    if len(bshape) != block.m:
        raise ShapeError("component count does not match the block profile")
    total = Poly.one(block.registry)
    for color, shape in enumerate(bshape, start=1):
        total = total * super_schur_component(shape, block, color, algorithm)
        if total.is_zero():
            break
    return total


# -- colored power sums ---------------------------------------------------------


def colored_power_sum(a: int, i: int, block: BlockVariables) -> Poly:
    """P_a^(i) = sum_j zeta^(-ij) p_a(x^(j)/y^(j)), with exact cyclotomic coefficients."""
    m = block.m
    if not 1 <= i <= m:
        raise ValueError(f"color {i} out of range 1..{m}")
    registry = block.registry
    total = Poly.zero(registry)
    for j in range(1, m + 1):
        root = CyclotomicNumber.zeta(m, (-i * j) % m)
        total = total + root * super_power_sum(
            a, block.x_polys(j), block.y_polys(j), registry
        )
    return total


def colored_power_sum_product(bmu: Multipartition, block: BlockVariables) -> Poly:
    """P_bmu = prod_i prod_j P^(i)_{mu^(i)_j}."""
    total = Poly.one(block.registry)
    for i, component in enumerate(bmu, start=1):
        for part in component:
            total = total * colored_power_sum(part, i, block)
    return total


# -- the Hecke-side weight functions -------------------------------------------


def q_tilde(alpha: tuple[int, ...], beta: tuple[int, ...], block: BlockVariables) -> Poly:
    """The monomial weight attached to a sorted basis tuple of type (alpha; beta)."""
    profile = block.profile
    if len(alpha) != profile.k or len(beta) != profile.l:
        raise ShapeError("alpha/beta lengths must match the profile")
    registry = block.registry
    x_names = block.x_names()
    y_names = block.y_names()
    weight = sum(alpha) + sum(beta)
    len_alpha = sum(1 for v in alpha if v)
    len_beta = sum(1 for v in beta if v)
    len_both = len_alpha + len_beta
    if len_both == 0:
        raise ShapeError("q_tilde needs a nonempty composition")
    powers = {}
    for name, e in zip(x_names, alpha):
        if e:
            powers[name] = e
    for name, e in zip(y_names, beta):
        if e:
            powers[name] = e
    # the (-1)^(|beta|-l(beta)) prefactor and the signs of (-y)^beta combine
    sign = (-1) ** len_beta
    q_power = sum(alpha) - len_alpha + len_beta - sum(beta)
    mono = Poly.monomial(registry, powers, sign)
    q_part = Poly.var(registry, "q", q_power) if q_power else Poly.one(registry)
    return mono * q_part * block.q_minus_q_inv ** (len_both - 1)


def q_n_i(n: int, i: int, block: BlockVariables) -> Poly:
    """Trace of D T(n,i) in closed form, with the (q - q^-1) prefactor cancelled.

    q_n^(i) = q^n/(q-q^-1) sum_{c in C(n;m)} Q_c^i prod_j q_{c_j}(x^(j)/y^(j); q^-2),
    where Q_c is the Q of the largest color with a positive part.  Each
    composition term is divided exactly by (q - q^-1); a nonzero remainder is
    an internal consistency error.
    """
    if n < 1:
        raise ValueError("q_n_i needs n >= 1")
    registry = block.registry
    m = block.m
    t = Poly.var(registry, "q", -2)
    q_power = Poly.var(registry, "q", n)

    @lru_cache(maxsize=None)
    def hl(color: int, size: int) -> Poly:
        return super_hall_littlewood_q(
            size, block.x_polys(color), block.y_polys(color), t, registry
        )

    total = Poly.zero(registry)
    for bc in compositions(n, m):
        term = q_power
        largest = 0
        for j, c in enumerate(bc, start=1):
            if c:
                term = term * hl(j, c)
                largest = j
        try:
            term = term.exact_div(block.q_minus_q_inv)
        except DomainError as err:
            raise ConsistencyError(
                f"(q - q^-1) prefactor failed to cancel for composition {bc}"
            ) from err
        total = total + block.Q(largest, i) * term
    return total


def q_bmu(bmu: Multipartition, block: BlockVariables) -> Poly:
    """q_bmu = prod_i prod_j q^(i)_{mu^(i)_j}."""
    if len(bmu) != block.m:
        raise ShapeError("component count does not match the block profile")
    total = Poly.one(block.registry)
    for i, component in enumerate(bmu, start=1):
        for part in component:
            total = total * q_n_i(part, i, block)
    return total


# -- monomial coordinates for the solver ----------------------------------------


def degree_monomials(num_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of the given total degree, in the canonical order."""
    return compositions(degree, num_vars)


def coordinates_on_degree(f: Poly, names: list[str], degree: int) -> list[Poly]:
    """Coefficient of each degree-`degree` monomial in `names`, canonical order.

    Entries are polynomials in the remaining variables.  Terms of f whose
    degree in `names` differs from `degree` are rejected: the solver operates
    on homogeneous expansions only.
    """
    grouped = f.coefficients_by(names)
    for key in grouped:
        if sum(key) != degree:
            raise ConsistencyError(
                f"non-homogeneous term of degree {sum(key)} (expected {degree})"
            )
    zero = Poly.zero(f.registry)
    return [grouped.get(mono, zero) for mono in degree_monomials(len(names), degree)]
