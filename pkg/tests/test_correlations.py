import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import entropy_of_spectrum
from qcorr.correlations import (
    A_STRONGER,
    EQUAL,
    NPT,
    PPT_ENT,
    SEP,
    analytic_d,
    classify_family,
    compare_d,
    conditional_entropy,
    correlation_report,
    d_correlation,
    is_ppt,
    mutual_entropy,
    relative_entropy,
    von_neumann_entropy,
)
from qcorr.linalg import DomainError, ValidationError, partial_trace
from qcorr.states import (
    bell_family_eps,
    horodecki3,
    horodecki_general,
    max_entangled,
    pure_from_schmidt,
    separable_mixture,
    sigma_projector,
)
from randstates import random_density, random_separable

LN2, LN3 = math.log(2), math.log(3)


def perfectly_correlated(d=3):
    e = [np.diag(np.eye(d)[i]).astype(complex) for i in range(d)]
    return separable_mixture([1 / d] * d, e, e)


def test_entropy_basics():
    assert von_neumann_entropy(max_entangled(3)) == pytest.approx(0, abs=1e-12)
    assert von_neumann_entropy(np.eye(5) / 5) == pytest.approx(math.log(5), abs=1e-14)
    expected = LN3 - analytic_d("horodecki3", 2.5)
    assert von_neumann_entropy(horodecki3(2.5)) == pytest.approx(expected, abs=1e-12)
    assert von_neumann_entropy(horodecki3(2.5)) == pytest.approx(1.8781, abs=1e-4)


def test_entropy_rejects_invalid():
    with pytest.raises(ValidationError, match="positive semidefinite"):
        von_neumann_entropy(np.diag([1.1, -0.1]))
    with pytest.raises(ValidationError, match="trace"):
        von_neumann_entropy(np.eye(2))


def test_relative_entropy(rng):
    theta = random_density(4, rng)
    assert relative_entropy(theta, theta) == pytest.approx(0, abs=1e-12)
    t = bell_family_eps(1.0)
    rho, sigma = partial_trace(t, "K"), partial_trace(t, "H")
    assert relative_entropy(t, np.kron(rho, sigma)) == pytest.approx(mutual_entropy(t), abs=1e-10)
    assert relative_entropy(max_entangled(3), sigma_projector(3, 1) / 3) == math.inf


def test_relative_entropy_against_logm(rng):
    from scipy.linalg import logm

    a, b = random_density(4, rng), random_density(4, rng)
    expected = np.trace(a @ (logm(a) - logm(b))).real
    assert relative_entropy(a, b) == pytest.approx(expected, abs=1e-10)


def test_mutual_entropy_examples(rng):
    assert mutual_entropy(np.kron(random_density(2, rng), random_density(3, rng)), (2, 3)) == pytest.approx(0, abs=1e-12)
    assert mutual_entropy(max_entangled(2)) == pytest.approx(2 * LN2, abs=1e-12)
    assert mutual_entropy(perfectly_correlated()) == pytest.approx(LN3, abs=1e-12)


def test_conditional_entropy_examples(rng):
    rho, sigma = random_density(2, rng), random_density(3, rng)
    theta = np.kron(rho, sigma)
    assert conditional_entropy(theta, "H", (2, 3)) == pytest.approx(von_neumann_entropy(sigma), abs=1e-12)
    assert conditional_entropy(theta, "K", (2, 3)) == pytest.approx(von_neumann_entropy(rho), abs=1e-12)
    assert conditional_entropy(max_entangled(2), "H") == pytest.approx(-LN2, abs=1e-12)
    assert conditional_entropy(perfectly_correlated(), "H") == pytest.approx(0, abs=1e-12)
    assert conditional_entropy(perfectly_correlated(), "K") == pytest.approx(0, abs=1e-12)


def test_d_correlation_examples():
    assert d_correlation(max_entangled(2)) == pytest.approx(LN2, abs=1e-12)
    assert d_correlation(bell_family_eps(1.0)) == pytest.approx(-(2 / 3) * LN3, abs=1e-12)
    assert d_correlation(bell_family_eps(1.0)) == pytest.approx(-0.7324, abs=1e-4)
    assert d_correlation(np.eye(4) / 4) == pytest.approx(-LN2, abs=1e-12)


def test_is_ppt_examples(rng):
    assert is_ppt(random_separable(3, 3, rng))[0]
    assert not is_ppt(horodecki3(4.5))[0]
    for eps in (0.1, 1.0, 10.0):
        assert is_ppt(bell_family_eps(eps))[0]
    flag_h, m_h = is_ppt(horodecki3(0.5))
    assert not flag_h and m_h < 0


def test_analytic_values():
    assert analytic_d("horodecki3", 3.1) == pytest.approx(-0.7587, abs=5e-5)
    assert analytic_d("bell_eps", 1.0) == pytest.approx(-(2 / 3) * LN3, abs=1e-14)
    # the printed closed form evaluated independently by eigenvalue entropy
    w = [0, 0, 2 / 7] + [2.5 / 21] * 6
    assert analytic_d("horodecki3", 2.5) == pytest.approx(LN3 - entropy_of_spectrum(np.array(w)), abs=1e-14)
    assert analytic_d("horodecki3", 2.5) == pytest.approx(-0.7795, abs=5e-5)
    for a in (0.0, 5.0):
        assert analytic_d("horodecki3", a) == pytest.approx(d_correlation(horodecki3(a)), abs=1e-10)
    with pytest.raises(DomainError):
        analytic_d("horodecki3", 5.5)
    with pytest.raises(DomainError):
        analytic_d("bell_eps", -1)


def test_analytic_matches_numeric():
    for a in np.linspace(0, 5, 101):
        assert abs(analytic_d("horodecki3", a) - d_correlation(horodecki3(a))) <= 1e-10
    for e in 10 ** np.linspace(-1, 1, 101):
        assert abs(analytic_d("bell_eps", e) - d_correlation(bell_family_eps(e))) <= 1e-10


def test_classify():
    assert classify_family("horodecki_d", 3, 2.5) == SEP
    assert classify_family("horodecki_d", 4, 0.5) == NPT
    assert classify_family("bell_eps", 3, 2.0) == PPT_ENT
    assert classify_family("bell_eps", 3, 1.0) == SEP
    assert [classify_family("horodecki", 3, a) for a in (0.5, 1, 1.5, 2, 3, 3.5, 4, 4.5)] == [
        NPT, PPT_ENT, PPT_ENT, SEP, SEP, PPT_ENT, PPT_ENT, NPT,
    ]
    assert [classify_family("horodecki", 4, a) for a in (0.9, 1, 3, 7, 7.5, 9, 9.1)] == [
        NPT, PPT_ENT, SEP, SEP, PPT_ENT, PPT_ENT, NPT,
    ]
    with pytest.raises(DomainError):
        classify_family("horodecki", 3, 6)


@pytest.mark.parametrize("d,top", [(3, 5), (4, 10)])
def test_classify_agrees_with_ppt_numerics(d, top):
    for a in np.linspace(0, top, 101):
        margin = correlation_report(horodecki_general(d, a)).ppt_margin
        assert (classify_family("horodecki", d, a) == NPT) == (margin < -1e-9)


def test_compare():
    order, d_a, d_b = compare_d(bell_family_eps(1.0), horodecki3(3.1))
    assert order == A_STRONGER and d_a > d_b
    assert compare_d(horodecki3(1.3), horodecki3(1.3))[0] == EQUAL
    assert compare_d(horodecki3(0.5), horodecki3(2.5))[0] == A_STRONGER


def test_compare_marginal_mismatch(rng):
    with pytest.raises(ValidationError, match="marginals differ"):
        compare_d(horodecki3(2.5), random_density(9, rng))


def test_report_identities(rng):
    theta = random_density(6, rng)
    rep = correlation_report(theta, (2, 3))
    assert rep.I == pytest.approx(rep.S_rho + rep.S_sigma - rep.S_theta, abs=1e-10)
    assert rep.D == pytest.approx((rep.S_rho + rep.S_sigma) / 2 - rep.S_theta, abs=1e-10)
    assert rep.D == pytest.approx(-(rep.S_cond_K_given_H + rep.S_cond_H_given_K) / 2, abs=1e-10)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2), (2, 3), (3, 3)]))
def test_mutual_entropy_is_relative_entropy(seed, dims):
    rng = np.random.default_rng(seed)
    theta = random_density(dims[0] * dims[1], rng)
    rho, sigma = partial_trace(theta, "K", dims), partial_trace(theta, "H", dims)
    assert mutual_entropy(theta, dims) == pytest.approx(relative_entropy(theta, np.kron(rho, sigma)), abs=1e-8)
    assert mutual_entropy(theta, dims) >= -1e-10


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 3))
def test_pure_states_d_correlation(seed, rank):
    rng = np.random.default_rng(seed)
    lam = rng.random(rank) + 0.05
    lam = lam / np.linalg.norm(lam)
    theta = pure_from_schmidt(lam, 3)
    s_rho = von_neumann_entropy(partial_trace(theta, "K"))
    if rank == 1:
        assert d_correlation(theta) == pytest.approx(0, abs=1e-10)
    else:
        assert d_correlation(theta) == pytest.approx(s_rho, abs=1e-10)
        assert d_correlation(theta) > 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2), (2, 3), (3, 3)]))
def test_ppt_states_have_nonpositive_d(seed, dims):
    rng = np.random.default_rng(seed)
    theta = random_separable(*dims, rng)
    rep = correlation_report(theta, dims)
    assert rep.ppt
    assert rep.D <= 1e-9
    assert rep.S_theta >= max(rep.S_rho, rep.S_sigma) - 1e-10
