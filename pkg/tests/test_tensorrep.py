"""Tests for the tensor-superspace trace oracle."""

import random

import pytest

from superfrob.combinat import (
    HookProfile,
    compositions,
    multipartitions,
    standard_representative,
)
from superfrob.exact import Poly
from superfrob.symfunc import (
    BlockVariables,
    colored_power_sum_product,
    q_bmu,
    q_n_i,
    q_tilde,
    super_power_sum,
)
from superfrob.tensorrep import (
    TensorContext,
    apply_D,
    apply_Omega,
    apply_S,
    apply_T,
    apply_T1,
    apply_T_inv,
    apply_phi_s,
    apply_word,
    classical_trace_D,
    omega_t_word,
    standard_word,
    trace_D_word,
)


def make_ctx(bk, bl, n, **kwargs):
    block = BlockVariables(HookProfile(bk, bl))
    return TensorContext(block, n, **kwargs)


def vec_equal(a, b):
    keys = set(a) | set(b)
    for k in keys:
        va, vb = a.get(k), b.get(k)
        if va is None:
            if not vb.is_zero():
                return False
        elif vb is None:
            if not va.is_zero():
                return False
        elif va != vb:
            return False
    return True


def test_phi_s_cases():
    ctx = make_ctx((1,), (1,), 2)
    one = ctx.one
    # equal even entries: fixed with sign +1
    assert apply_phi_s(ctx, 2, {(1, 1): one}) == {(1, 1): one}
    # equal odd entries: sign -1
    assert apply_phi_s(ctx, 2, {(2, 2): one}) == {(2, 2): -one}
    # mixed parities swap with sign (+1)^(0*1)
    assert apply_phi_s(ctx, 2, {(1, 2): one}) == {(2, 1): one}
    with pytest.raises(IndexError):
        apply_phi_s(ctx, 3, {(1, 1): one})


def test_T_action_cases():
    ctx = make_ctx((1,), (1,), 2)
    one = ctx.one
    q, q_inv, qmqi = ctx.q, ctx.q_inv, ctx.q_minus_q_inv
    assert apply_T(ctx, 2, {(1, 1): one}) == {(1, 1): q}
    assert apply_T(ctx, 2, {(2, 2): one}) == {(2, 2): -q_inv}
    assert apply_T(ctx, 2, {(1, 2): one}) == {(1, 2): qmqi, (2, 1): one}
    assert apply_T(ctx, 2, {(2, 1): one}) == {(1, 2): one}


def test_T_diagonal_verification_flag():
    ctx = make_ctx((1,), (1,), 2, verify_diagonal=True)
    one = ctx.one
    assert apply_T(ctx, 2, {(1, 1): one}) == {(1, 1): ctx.q}
    assert apply_T(ctx, 2, {(2, 2): one}) == {(2, 2): -ctx.q_inv}


def test_T_inv_is_inverse():
    ctx = make_ctx((1, 1), (1, 1), 2)
    for tup in ctx.basis():
        v = ctx.basis_vector(tup)
        assert vec_equal(apply_T_inv(ctx, 2, apply_T(ctx, 2, v)), v)
        assert vec_equal(apply_T(ctx, 2, apply_T_inv(ctx, 2, v)), v)


def test_S_matches_T_for_single_color():
    ctx = make_ctx((1,), (1,), 2)
    for tup in ctx.basis():
        v = ctx.basis_vector(tup)
        assert vec_equal(apply_S(ctx, 2, v), apply_T(ctx, 2, v))


def test_S_dispatches_on_color():
    ctx = make_ctx((1, 1), (0, 0), 2)
    one = ctx.one
    # different colors: plain signed swap
    assert apply_S(ctx, 2, {(1, 2): one}) == {(2, 1): one}
    # same color: Hecke action
    assert apply_S(ctx, 2, {(1, 1): one}) == {(1, 1): ctx.q}


def test_Omega_examples():
    ctx = make_ctx((1, 1), (0, 0), 2)
    one = ctx.one
    assert apply_Omega(ctx, 1, 1, {(2, 1): one}) == {(2, 1): ctx.Q[2]}
    assert apply_Omega(ctx, 1, 0, {(2, 1): one}) == {(2, 1): one}
    assert apply_Omega(ctx, 2, 3, {(2, 1): one}) == {(2, 1): ctx.Q[1] ** 3}


def test_T1_collapses_for_single_color():
    # m = 1: every S_a is T_a, so the word contracts to Omega_1 = Q_1
    ctx = make_ctx((1,), (1,), 3)
    for tup in ctx.basis():
        v = ctx.basis_vector(tup)
        assert vec_equal(apply_T1(ctx, v), {tup: ctx.Q[1]})


def test_T1_n1_equals_Omega1():
    ctx = make_ctx((1, 1), (1, 1), 1)
    for tup in ctx.basis():
        v = ctx.basis_vector(tup)
        assert vec_equal(apply_T1(ctx, v), apply_Omega(ctx, 1, 1, v))


def test_cyclotomic_relation_annihilates():
    # (T_1 - Q_1)(T_1 - Q_2) = 0 on every basis vector, m = 2, n = 2
    ctx = make_ctx((1, 1), (1, 1), 2)
    for tup in ctx.basis():
        acc = ctx.basis_vector(tup)
        for i in (1, 2):
            image = apply_T1(ctx, acc)
            for key, value in acc.items():
                image[key] = image.get(key, Poly.zero(ctx.registry)) - value * ctx.Q[i]
            acc = {k: v for k, v in image.items() if not v.is_zero()}
        assert acc == {}


def test_D_diagonal_weights():
    ctx = make_ctx((1,), (1,), 1)
    one = ctx.one
    x = Poly.var(ctx.registry, "x1_1")
    y = Poly.var(ctx.registry, "y1_1")
    assert apply_D(ctx, {(1,): one}) == {(1,): x}
    assert apply_D(ctx, {(2,): one}) == {(2,): -y}
    assert apply_D(ctx, {}) == {}


def test_D_commutes_with_T():
    ctx = make_ctx((1, 1), (1, 1), 2)
    for tup in ctx.basis():
        v = ctx.basis_vector(tup)
        assert vec_equal(
            apply_D(ctx, apply_T(ctx, 2, v)), apply_T(ctx, 2, apply_D(ctx, v))
        )


def test_trace_identity_word_is_power_sum():
    ctx = make_ctx((1,), (1,), 1)
    block = ctx.block
    expected = super_power_sum(1, block.x_polys(1), block.y_polys(1), ctx.registry)
    assert trace_D_word(ctx, ()) == expected


def test_standard_word_examples():
    assert standard_word(((1,), ()), 1) == (("omega", 1, 1),)
    assert standard_word(((2,),), 2) == (("omega", 2, 1), ("T", 2))
    assert standard_word(((1,), (1,)), 2) == (("omega", 1, 1), ("omega", 2, 2))
    assert standard_word(((2, 1), (1,)), 4) == (
        ("omega", 2, 1),
        ("T", 2),
        ("omega", 3, 1),
        ("omega", 4, 2),
    )
    with pytest.raises(ValueError):
        standard_word(((1,),), 2)


def test_trace_lemma_coxeter_word_m1():
    # Trace(D T_n...T_2) equals the q_tilde sum with unit Q factors
    ctx = make_ctx((1,), (1,), 2)
    block = ctx.block
    profile = ctx.profile
    total = Poly.zero(ctx.registry)
    for weight in compositions(2, profile.k + profile.l):
        alpha, beta = profile.alpha_beta(weight)
        total = total + q_tilde(alpha, beta, block)
    assert trace_D_word(ctx, (("T", 2),)) == total


@pytest.mark.parametrize(
    "bk,bl,n",
    [((1,), (1,), 2), ((1, 1), (1, 1), 2), ((1, 1), (1, 1), 3), ((1, 0), (0, 1), 3)],
)
def test_trace_lemma_with_omega_exponents(bk, bl, n):
    # Trace(D Omega_1^{c_1}..Omega_n^{c_n} T_n..T_2) = sum Q^c_(a;b) q_tilde_(a;b)
    ctx = make_ctx(bk, bl, n)
    block = ctx.block
    profile = ctx.profile
    m = profile.m
    rng = random.Random(20200 + n)
    for _ in range(4):
        exponents = tuple(rng.randrange(0, m + 1) for _ in range(n))
        lhs = trace_D_word(ctx, omega_t_word(exponents, n))
        rhs = Poly.zero(ctx.registry)
        for weight in compositions(n, profile.k + profile.l):
            alpha, beta = profile.alpha_beta(weight)
            # the sorted tuple of this weight, to read off per-position colors
            sorted_tuple = tuple(
                idx
                for idx, count in enumerate(weight, start=1)
                for _ in range(count)
            )
            q_factor = Poly.one(ctx.registry)
            for position, exponent in enumerate(exponents):
                if exponent:
                    color = profile.color_of(sorted_tuple[position])
                    q_factor = q_factor * block.Q(color, exponent)
            rhs = rhs + q_factor * q_tilde(alpha, beta, block)
        assert lhs == rhs


@pytest.mark.parametrize("m", [1, 2, 3])
def test_trace_equals_q_n_i(m):
    # Trace(D T(n,i)) against the closed super Hall-Littlewood form
    bk = (1,) * m
    bl = (1,) * m
    for n in (1, 2, 3):
        ctx = make_ctx(bk, bl, n)
        for i in range(1, m + 1):
            bmu = tuple((n,) if c == i else () for c in range(1, m + 1))
            word = standard_word(bmu, n)
            assert trace_D_word(ctx, word) == q_n_i(n, i, ctx.block)


def test_trace_equals_q_bmu_small():
    for m, n in [(1, 2), (2, 2)]:
        ctx = make_ctx((1,) * m, (1,) * m, n)
        for bmu in multipartitions(m, n):
            word = standard_word(bmu, n)
            assert trace_D_word(ctx, word) == q_bmu(bmu, ctx.block)


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_classical_trace_equals_colored_power_sum(m, n):
    # q = 1 oracle: Trace(D w(bmu)) = P_bmu with cyclotomic coefficients
    ctx = make_ctx((1,) * m, (1,) * m, n)
    block = ctx.block
    for bmu in multipartitions(m, n):
        w = standard_representative(bmu, m, n)
        assert classical_trace_D(ctx, w, m) == colored_power_sum_product(bmu, block)


def test_apply_word_composition_order():
    ctx = make_ctx((1,), (1,), 2)
    v = ctx.basis_vector((1, 2))
    # word (D, T2) applies T2 first, then D
    direct = apply_D(ctx, apply_T(ctx, 2, v))
    assert vec_equal(apply_word(ctx, (("D",), ("T", 2)), v), direct)


def test_type_a_relations_at_n4():
    # quadratic, braid and distant commutation on every basis vector at n = 4
    from superfrob.tensorrep import vec_add, vec_equal, vec_scale

    for bk, bl in [((2,), (2,)), ((1, 1), (1, 0))]:
        ctx = make_ctx(bk, bl, 4)
        for tup in ctx.basis():
            v = ctx.basis_vector(tup)
            for a in range(2, 5):
                Tv = apply_T(ctx, a, v)
                lhs = apply_T(ctx, a, Tv)
                rhs = vec_add(vec_scale(Tv, ctx.q_minus_q_inv), v)
                assert vec_equal(lhs, rhs), (bk, bl, a, tup)
            for a in (2, 3):
                braid_lhs = apply_word(ctx, (("T", a), ("T", a + 1), ("T", a)), v)
                braid_rhs = apply_word(ctx, (("T", a + 1), ("T", a), ("T", a + 1)), v)
                assert vec_equal(braid_lhs, braid_rhs), (bk, bl, a, tup)
            far_lhs = apply_word(ctx, (("T", 2), ("T", 4)), v)
            far_rhs = apply_word(ctx, (("T", 4), ("T", 2)), v)
            assert vec_equal(far_lhs, far_rhs), (bk, bl, tup)
