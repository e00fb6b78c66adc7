"""Named verification suites behind `superfrob verify`.

Each check re-derives one link of the chain connecting the operator algebra,
the symmetric-function identities and the solved character tables, at the
sizes given in the run configuration.  Checks return results instead of
raising, so a report can enumerate every failure with the offending shape or
profile.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from superfrob.combinat import (
    HookProfile,
    compositions,
    centralizer_order_sym,
    is_hook_multi,
    multipartitions,
    partitions,
)
from superfrob.exact import Poly, transport
from superfrob.characters import (
    degrees_match_counts,
    hecke_character_table,
    mn_character,
    specialize_table,
    verify_column_orthogonality,
    verify_orthogonality,
    wreath_character_table,
)
from superfrob.symfunc import (
    BlockVariables,
    colored_power_sum_product,
    complete_homogeneous,
    hall_littlewood_q,
    q_bmu,
    q_tilde,
    super_hall_littlewood_q,
    super_hall_littlewood_q_via_decomposition,
    super_power_sum_product,
    super_schur,
)
from superfrob.tensorrep import (
    TensorContext,
    apply_T1,
    apply_word,
    standard_word,
    trace_D_word,
    vec_add,
    vec_equal,
    vec_scale,
)

SUITE_NAMES = ("relations", "frobenius", "orthogonality", "identities", "all")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


@dataclass(frozen=True)
class SuiteConfig:
    m: int
    n: int
    bk: tuple[int, ...]
    bl: tuple[int, ...]

    @property
    def profile(self) -> HookProfile:
        return HookProfile(self.bk, self.bl)


def _timed(name: str, fn) -> CheckResult:
    start = time.perf_counter()
    passed, detail = fn()
    return CheckResult(name, passed, detail, time.perf_counter() - start)


# -- relations -----------------------------------------------------------------


def _words_agree(ctx: TensorContext, word_a, word_b) -> tuple[bool, str]:
    for tup in ctx.basis():
        va = apply_word(ctx, word_a, ctx.basis_vector(tup))
        vb = apply_word(ctx, word_b, ctx.basis_vector(tup))
        if not vec_equal(va, vb):
            return False, f"mismatch on basis vector {tup}"
    return True, "all basis vectors"


def suite_relations(config: SuiteConfig) -> list[CheckResult]:
    ctx = TensorContext(BlockVariables(config.profile), config.n, verify_diagonal=True)
    n = config.n
    checks: list[CheckResult] = []

    def quadratic():
        for a in range(2, n + 1):
            for tup in ctx.basis():
                v = ctx.basis_vector(tup)
                Tv = apply_word(ctx, (("T", a),), v)
                lhs = apply_word(ctx, (("T", a),), Tv)
                rhs = vec_add(vec_scale(Tv, ctx.q_minus_q_inv), v)
                if not vec_equal(lhs, rhs):
                    return False, f"T_{a}^2 != (q-q^-1)T_{a} + 1 on {tup}"
        return True, f"T_a quadratic for a=2..{n}"

    checks.append(_timed("quadratic", quadratic))

    def braid():
        for a in range(2, n):
            ok, detail = _words_agree(
                ctx,
                (("T", a), ("T", a + 1), ("T", a)),
                (("T", a + 1), ("T", a), ("T", a + 1)),
            )
            if not ok:
                return False, f"braid T_{a} T_{a + 1}: {detail}"
        return True, f"braid relations for a=2..{n - 1}"

    checks.append(_timed("braid", braid))

    def commutation():
        for a in range(2, n + 1):
            for b in range(a + 2, n + 1):
                ok, detail = _words_agree(
                    ctx, (("T", a), ("T", b)), (("T", b), ("T", a))
                )
                if not ok:
                    return False, f"[T_{a}, T_{b}] != 0: {detail}"
        return True, "distant generators commute"

    checks.append(_timed("commutation", commutation))

    def type_b_braid():
        if n < 2:
            return True, "skipped for n < 2"
        ok, detail = _words_agree(
            ctx,
            (("T1",), ("T", 2), ("T1",), ("T", 2)),
            (("T", 2), ("T1",), ("T", 2), ("T1",)),
        )
        return ok, detail if not ok else "T_1 T_2 T_1 T_2 = T_2 T_1 T_2 T_1"

    checks.append(_timed("type-b-braid", type_b_braid))

    def cyclotomic():
        for tup in ctx.basis():
            acc = ctx.basis_vector(tup)
            for i in range(1, config.m + 1):
                acc = vec_add(apply_T1(ctx, acc), vec_scale(acc, -ctx.Q[i]))
            if acc:
                return False, f"prod (T_1 - Q_i) nonzero on {tup}"
        return True, f"prod_(i=1..{config.m}) (T_1 - Q_i) = 0"

    checks.append(_timed("cyclotomic", cyclotomic))

    def d_commutes():
        words = [(("D",), ("T1",)), (("T1",), ("D",))]
        ok, detail = _words_agree(ctx, words[0], words[1])
        if not ok:
            return False, f"[D, T_1] != 0: {detail}"
        for a in range(2, n + 1):
            ok, detail = _words_agree(
                ctx, (("D",), ("T", a)), (("T", a), ("D",))
            )
            if not ok:
                return False, f"[D, T_{a}] != 0: {detail}"
        return True, "D commutes with T_1 and all T_a"

    checks.append(_timed("d-commutation", d_commutes))
    return checks


# -- frobenius -----------------------------------------------------------------


def suite_frobenius(config: SuiteConfig) -> list[CheckResult]:
    block = BlockVariables(config.profile)
    ctx = TensorContext(block, config.n)
    labels = multipartitions(config.m, config.n)
    checks: list[CheckResult] = []

    def trace_oracle():
        for bmu in labels:
            lhs = trace_D_word(ctx, standard_word(bmu, config.n))
            rhs = q_bmu(bmu, block)
            if lhs != rhs:
                return False, f"Trace(D T(bmu)) != q_bmu at {bmu}"
        return True, f"{len(labels)} standard words against closed forms"

    checks.append(_timed("trace-oracle", trace_oracle))

    def main_theorem():
        table = hecke_character_table(config.m, config.n)
        schur_values = {
            bshape: super_schur(bshape, block) for bshape in labels
        }
        for bmu in labels:
            lhs = trace_D_word(ctx, standard_word(bmu, config.n))
            total = Poly.zero(block.registry)
            for bshape in labels:
                entry = transport(table.entry(bshape, bmu), block.registry)
                total = total + entry * schur_values[bshape]
            if lhs != total:
                return False, f"Frobenius identity fails at {bmu}"
        return True, f"identity on independent profile {config.bk}|{config.bl}"

    checks.append(_timed("main-theorem", main_theorem))
    return checks


# -- orthogonality ---------------------------------------------------------------


def suite_orthogonality(config: SuiteConfig) -> list[CheckResult]:
    checks: list[CheckResult] = []
    specialized = specialize_table(hecke_character_table(config.m, config.n))

    def dual_path():
        wreath = wreath_character_table(config.m, config.n)
        for r in range(len(specialized.rows)):
            for c in range(len(specialized.cols)):
                if wreath.entries[r][c] != specialized.entries[r][c]:
                    return False, (
                        f"specialize vs power-sum solve differ at "
                        f"{specialized.rows[r]}, {specialized.cols[c]}"
                    )
        return True, "specialized table equals the power-sum solve"

    checks.append(_timed("dual-path", dual_path))

    def rows():
        report = verify_orthogonality(specialized)
        if not report.passed:
            return False, f"{len(report.violations)} violating row pairs"
        return True, f"{report.pairs_checked} row pairs"

    checks.append(_timed("row-orthogonality", rows))

    def columns():
        report = verify_column_orthogonality(specialized)
        if not report.passed:
            return False, f"{len(report.violations)} violating column pairs"
        return True, f"{report.pairs_checked} column pairs"

    checks.append(_timed("column-orthogonality", columns))

    def degrees():
        if not degrees_match_counts(specialized):
            return False, "identity column does not match multitableaux counts"
        return True, "degree column equals standard multitableaux counts"

    checks.append(_timed("degree-column", degrees))
    return checks


# -- identities -------------------------------------------------------------------


def suite_identities(config: SuiteConfig) -> list[CheckResult]:
    checks: list[CheckResult] = []
    profile = config.profile

    def eq_qq():
        cases = 0
        for color in range(1, config.m + 1):
            k_i, l_i = config.bk[color - 1], config.bl[color - 1]
            if k_i + l_i == 0:
                continue
            block = BlockVariables(HookProfile((k_i,), (l_i,)))
            sub = block.profile
            t = Poly.var(block.registry, "q", -2)
            for size in range(1, config.n + 1):
                total = Poly.zero(block.registry)
                for weight in compositions(size, sub.k + sub.l):
                    alpha, beta = sub.alpha_beta(weight)
                    total = total + q_tilde(alpha, beta, block)
                lhs = total * block.q_minus_q_inv
                rhs = Poly.var(block.registry, "q", size) * super_hall_littlewood_q(
                    size, block.x_polys(1), block.y_polys(1), t, block.registry
                )
                if lhs != rhs:
                    return False, f"Eq(q-q) fails at color {color}, size {size}"
                cases += 1
        return True, f"{cases} (color, size) cases"

    checks.append(_timed("eq-qq", eq_qq))

    def super_schur_dual():
        block = BlockVariables(profile)
        cases = 0
        for size in range(config.n + 1):
            for bshape in multipartitions(config.m, size):
                alternating = super_schur(bshape, block, "alternating")
                tableau = super_schur(bshape, block, "tableau")
                if alternating != tableau:
                    return False, f"algorithms disagree at {bshape}"
                if alternating.is_zero() != (not is_hook_multi(bshape, profile)):
                    return False, f"hook vanishing wrong at {bshape}"
                cases += 1
        return True, f"{cases} multipartitions"

    checks.append(_timed("super-schur-dual", super_schur_dual))

    def king():
        k_1, l_1 = config.bk[0], config.bl[0]
        if k_1 + l_1 == 0:
            return True, "skipped: empty leading color block"
        block = BlockVariables(HookProfile((k_1,), (l_1,)))
        xs, ys = block.x_polys(1), block.y_polys(1)
        cases = 0
        for size in range(1, config.n + 1):
            for lam in partitions(size):
                rhs = Poly.zero(block.registry)
                for mu in partitions(size):
                    weight = Fraction(mn_character(lam, mu), centralizer_order_sym(mu))
                    rhs = rhs + weight * super_power_sum_product(mu, xs, ys, block.registry)
                if super_schur((lam,), block) != rhs:
                    return False, f"King expansion fails at {lam}"
                cases += 1
        return True, f"{cases} partitions"

    checks.append(_timed("king", king))

    def hl_degeneration():
        k_1 = config.bk[0]
        if k_1 == 0:
            return True, "skipped: no x variables in color 1"
        block = BlockVariables(HookProfile((k_1,), (0,)), extra=("t",))
        xs = block.x_polys(1)
        t = Poly.var(block.registry, "t")
        for a in range(config.n + 1):
            if hall_littlewood_q(a, xs, t).substitute({"t": 0}) != complete_homogeneous(
                a, xs, block.registry
            ):
                return False, f"q_a(x;0) != h_a at a={a}"
        return True, f"t -> 0 degeneration for a <= {config.n}"

    checks.append(_timed("hl-degeneration", hl_degeneration))

    def hl_decomposition():
        k_1, l_1 = config.bk[0], config.bl[0]
        block = BlockVariables(HookProfile((k_1,), (l_1,)), extra=("t",))
        xs, ys = block.x_polys(1), block.y_polys(1)
        t = Poly.var(block.registry, "t")
        for a in range(config.n + 1):
            direct = super_hall_littlewood_q(a, xs, ys, t, block.registry)
            decomposed = super_hall_littlewood_q_via_decomposition(
                a, xs, ys, "t", block.registry
            )
            if direct != decomposed:
                return False, f"decomposition fails at a={a}"
        return True, f"decomposition sum for a <= {config.n}"

    checks.append(_timed("hl-decomposition", hl_decomposition))

    def cancellation():
        colors = [
            i
            for i in range(1, config.m + 1)
            if config.bk[i - 1] >= 1 and config.bl[i - 1] >= 1
        ]
        if not colors:
            return True, "skipped: no color has both x and y variables"
        block = BlockVariables(profile, extra=("u",))
        u = Poly.var(block.registry, "u")
        pos = block.registry.index("u")
        size = min(config.n, 3)
        cases = 0
        for color in colors:
            swap = {
                f"x{color}_{config.bk[color - 1]}": u,
                f"y{color}_{config.bl[color - 1]}": u,
            }
            for bshape in multipartitions(config.m, size):
                for f in (
                    super_schur(bshape, block),
                    colored_power_sum_product(bshape, block),
                ):
                    g = f.substitute(swap)
                    if any(exps[pos] != 0 for exps in g.terms):
                        return False, f"u survives for {bshape} in color {color}"
                    cases += 1
        return True, f"{cases} substitutions checked"

    checks.append(_timed("cancellation", cancellation))
    return checks


def run_suite(name: str, config: SuiteConfig) -> list[CheckResult]:
    if name == "relations":
        return suite_relations(config)
    if name == "frobenius":
        return suite_frobenius(config)
    if name == "orthogonality":
        return suite_orthogonality(config)
    if name == "identities":
        return suite_identities(config)
    if name == "all":
        results = []
        for sub in ("relations", "frobenius", "orthogonality", "identities"):
            for result in run_suite(sub, config):
                result.name = f"{sub}/{result.name}"
                results.append(result)
        return results
    raise ValueError(f"unknown suite {name!r}")
