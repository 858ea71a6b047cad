import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annulus_kspectral.calculus import (
    apply_laurent,
    apply_laurent_adjoint,
    operator_norm,
    strict_domain,
)
from annulus_kspectral.certificate import CertificateParams, make_witness, witness_operator
from annulus_kspectral.core import AnnulusParams, CoeffVector, LaurentPolynomial, TruncationWindow, WeightSequence, make_gn
from annulus_kspectral.errors import NonConvergenceWarning, WindowOverflow
from annulus_kspectral.shift import ShiftOperator, step_matrix
from annulus_kspectral.supnorm import gn_sup_norm_closed

CG = 1 + math.sqrt(2)


def make_op(n, R, lo, hi):
    return ShiftOperator(WeightSequence(n, R), TruncationWindow(lo, hi))


def dense(p, op):
    fwd, inv = step_matrix(op), step_matrix(op, inverse=True)
    size = len(op.window)
    mat = np.zeros((size, size))
    for deg, c in p.items():
        mat += c * np.linalg.matrix_power(fwd if deg >= 0 else inv, abs(deg))
    return mat


def compressed_norm(p, op):
    start, stop = strict_domain(p, op)
    return np.linalg.svd(dense(p, op)[:, start:stop], compute_uv=False)[0]


def test_apply_gn_unit_vector():
    op = make_op(2, 2.0, -4, 4)
    p = make_gn(2, AnnulusParams(2.0))
    out = apply_laurent(p, op, CoeffVector.unit(op.window, 0))
    oracle = dense(p, op) @ CoeffVector.unit(op.window, 0).values
    np.testing.assert_allclose(out.values, oracle, rtol=0, atol=1e-15)
    assert out[-2] == 1.0 and out[2] == 1.0
    assert list(out.support()) == [-2, 2]


def test_constant_polynomial_is_identity(rng):
    op = make_op(3, 1.4, -6, 6)
    v = CoeffVector(op.window, rng.standard_normal(13))
    np.testing.assert_array_equal(apply_laurent(LaurentPolynomial.constant(1.0), op, v).values, v.values)


def test_apply_laurent_strict():
    op = make_op(2, 2.0, -4, 4)
    with pytest.raises(WindowOverflow):
        apply_laurent(make_gn(2, AnnulusParams(2.0)), op, CoeffVector.unit(op.window, 3))


def test_gn_on_witness():
    params = CertificateParams(3, 5, AnnulusParams(1.7))
    op = witness_operator(params)
    h = make_witness(params)
    out = apply_laurent(make_gn(3, params.a), op, h)
    assert out.norm() == pytest.approx(math.sqrt(4 + 2 / 25), rel=1e-12)
    assert out.norm() * 1.7**3 >= 2 * 1.7**3


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_linearity(seed):
    rng = np.random.default_rng(seed)
    op = make_op(3, 1.6, -20, 20)
    p = LaurentPolynomial({d: rng.standard_normal() for d in range(-3, 4)})
    q = LaurentPolynomial({d: rng.standard_normal() for d in range(-2, 3)})
    values = np.zeros(41)
    values[4:-4] = rng.standard_normal(33)
    v = CoeffVector(op.window, values)
    lhs = apply_laurent(p + q, op, v).values
    rhs = apply_laurent(p, op, v).values + apply_laurent(q, op, v).values
    np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-12 * np.abs(rhs).max())


def test_adjoint_matches_transpose(rng):
    op = make_op(2, 1.8, -15, 15)
    p = LaurentPolynomial({-2: 0.3, 1: -1.2, 2: 0.5})
    values = np.zeros(31)
    values[5:-5] = rng.standard_normal(21)
    y = CoeffVector(op.window, values)
    np.testing.assert_allclose(apply_laurent_adjoint(p, op, y).values, dense(p, op).T @ values, atol=1e-13)


def test_operator_norm_constant():
    op = make_op(2, 2.0, -8, 8)
    est = operator_norm(LaurentPolynomial.constant(-3.5), op)
    assert est.estimate == pytest.approx(3.5, rel=1e-15)
    assert est.certified_lower == pytest.approx(3.5, rel=1e-15)
    assert est.iterations == 1 and est.converged


def test_operator_norm_witness_probe():
    params = CertificateParams(2, 4, AnnulusParams(2.0))
    h = make_witness(params)
    op = witness_operator(params)
    p = make_gn(2, params.a)
    est = operator_norm(p, op, probes=[h])
    m = params.m
    witness_ratio = math.sqrt(4 + 2 / m**2) * m / math.sqrt(m**2 + 1)
    assert est.certified_lower >= witness_ratio * (1 - 1e-12)
    assert est.certified_lower <= est.estimate * (1 + 1e-10)


@pytest.mark.parametrize("n, R, lo, hi", [(2, 2.0, -8, 8), (2, 2.0, -30, 30), (3, 1.5, -20, 25), (4, 1.2, -16, 40)])
def test_operator_norm_matches_dense_svd(n, R, lo, hi):
    op = make_op(n, R, lo, hi)
    p = make_gn(n, AnnulusParams(R))
    est = operator_norm(p, op, tol=1e-13, max_iter=200000)
    oracle = compressed_norm(p, op)
    assert est.converged
    assert est.estimate == pytest.approx(oracle, rel=1e-6)
    assert est.certified_lower <= oracle * (1 + 1e-12)


def test_operator_norm_random_probe_range(rng):
    a = AnnulusParams(2.0)
    op = make_op(2, 2.0, -8, 8)
    p = make_gn(2, a)
    start, stop = strict_domain(p, op)
    values = np.zeros(17)
    values[start:stop] = rng.standard_normal(stop - start)
    est = operator_norm(p, op, probes=[CoeffVector(op.window, values)])
    assert est.certified_lower <= est.estimate * (1 + 1e-10)
    assert est.estimate <= CG * gn_sup_norm_closed(2, a) + 1e-9


def test_rayleigh_quotients_below_estimate(rng):
    op = make_op(3, 1.5, -30, 30)
    p = LaurentPolynomial({-3: 0.4, 0: 0.2, 3: 0.4})
    start, stop = strict_domain(p, op)
    est = operator_norm(p, op, tol=1e-12)
    for _ in range(50):
        values = np.zeros(61)
        values[start:stop] = rng.standard_normal(stop - start)
        x = CoeffVector(op.window, values)
        q = apply_laurent(p, op, x).norm() / x.norm()
        assert q <= est.estimate * (1 + 1e-12)


@pytest.mark.filterwarnings("ignore::annulus_kspectral.errors.NonConvergenceWarning")
def test_more_probes_never_lower_certificate(rng):
    op = make_op(2, 2.0, -10, 10)
    p = make_gn(2, AnnulusParams(2.0))
    start, stop = strict_domain(p, op)
    probes = []
    for _ in range(4):
        values = np.zeros(21)
        values[start:stop] = rng.standard_normal(stop - start)
        probes.append(CoeffVector(op.window, values))
    previous = 0.0
    for k in range(1, 5):
        cert = operator_norm(p, op, max_iter=1, probes=probes[:k]).certified_lower
        assert cert >= previous
        previous = cert


@pytest.mark.parametrize("n, R", [(2, 1.1), (2, 2.0), (3, 5.0), (5, 1.3)])
def test_sanity_ceiling(n, R):
    a = AnnulusParams(R)
    op = make_op(n, R, -12 * n, 12 * n)
    est = operator_norm(make_gn(n, a), op)
    assert est.certified_lower / gn_sup_norm_closed(n, a) <= CG + 1e-9


def test_annihilated_operator_is_flagged():
    op = make_op(2, 2.0, -4, 4)
    with pytest.warns(NonConvergenceWarning):
        est = operator_norm(LaurentPolynomial({}), op)
    assert est.certified_lower == 0.0 and not est.converged


def test_nonconvergence_is_flagged():
    op = make_op(2, 2.0, -40, 40)
    with pytest.warns(NonConvergenceWarning):
        est = operator_norm(make_gn(2, AnnulusParams(2.0)), op, tol=1e-300, max_iter=3)
    assert not est.converged and est.iterations == 3
    assert est.certified_lower > 0


def test_operator_norm_deterministic():
    op = make_op(3, 1.5, -30, 30)
    p = make_gn(3, AnnulusParams(1.5))
    assert operator_norm(p, op) == operator_norm(p, op)


def test_operator_norm_rejects_bad_input():
    op = make_op(2, 2.0, -4, 4)
    p = make_gn(2, AnnulusParams(2.0))
    with pytest.raises(ValueError):
        operator_norm(p, op, tol=0)
    with pytest.raises(ValueError):
        operator_norm(p, op, probes=[CoeffVector.zeros(op.window)])
    with pytest.raises(ValueError):
        operator_norm(p, make_op(2, 2.0, 0, 3))
