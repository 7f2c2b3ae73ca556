import numpy as np
import pytest

import m1poly


def test_version():
    assert m1poly.__version__ == "0.1.0"


def test_mu_numbers():
    assert m1poly.mu_number(4, 0.7) == 4.0
    assert m1poly.mu_number(3, 0.7) == pytest.approx(3 + 2 * 0.7)
    assert m1poly.mu_factorial(0, 0.7) == 1.0


def test_hyp_pfq_terminating():
    # 1F0(-2; ; x) = (1 - x)^2 ... not quite; -2 terminates after 3 terms:
    # 1 - 2x + x^2 with the k! denominators folded in.
    val = m1poly.hyp_pfq([-2.0], [], 0.3)
    assert val == pytest.approx(1 - 2 * 0.3 + 0.3**2, rel=1e-14)


def test_eval_methods_agree():
    for fam, args in [
        (m1poly.chihara_eval, (1.3, 0.7, 0.3)),
        (m1poly.bigjacobi_eval, (0.7, 0.5, 1.2, 0.3)),
        (m1poly.bannai_ito_eval, (0.5, 1.1, 4.2, 0.2, 3.6)),
    ]:
        for n in range(7):
            rec = fam(n, *args, method=m1poly.EvalMethod.recurrence)
            clo = fam(n, *args, method=m1poly.EvalMethod.closed)
            assert rec == pytest.approx(clo, rel=1e-10, abs=1e-12)
    for n in range(5):
        rec = m1poly.dualhahn_eval(n, 1.0, 0.3, 0.7, 4)
        clo = m1poly.dualhahn_eval(n, 1.0, 0.3, 0.7, 4, method=m1poly.EvalMethod.closed)
        assert rec == pytest.approx(clo, rel=1e-10, abs=1e-12)


def test_degree_zero_is_one():
    assert m1poly.chihara_eval(0, 0.4, 0.7, 0.3) == 1.0
    assert m1poly.bannai_ito_eval(0, 0.4, 1.1, 4.2, 0.2, 3.6) == 1.0


def test_bad_parameters_raise():
    with pytest.raises(m1poly.NumericError):
        m1poly.bigjacobi_eval(2, 0.5, 0.5, 1.2, 1.0)
    with pytest.raises(ValueError):  # NumericError maps onto ValueError
        m1poly.bi_ortho(1.0, 1.0, 0.1, 0.2, 3)


def test_discrete_orthogonality():
    for N in (4, 5):
        od = m1poly.dualhahn_ortho(0.3, 0.7, N)
        pts = np.asarray(od["points"])
        w = np.asarray(od["weights"])
        assert od["N"] == N
        assert (w > 0).all()
        V = np.array([[m1poly.dualhahn_eval(n, x, 0.3, 0.7, N) for x in pts] for n in range(N + 1)])
        G = V @ np.diag(w) @ V.T
        scale = 1.0 / np.sqrt(np.asarray(od["norms"]))
        assert np.allclose(scale[:, None] * G * scale[None, :], np.eye(N + 1), atol=1e-10)


def test_cg_matrix_orthogonal():
    M = m1poly.cg_matrix(6, 0.6, 1, 0.9, 1)
    assert M.shape == (7, 7)
    assert np.allclose(M @ M.T, np.eye(7), atol=1e-10)
    assert M[0, 0] == pytest.approx(
        m1poly.cg_coefficient(0, 6, 6, 0, 0.6, 1, 0.9, 1), rel=1e-14
    )


def test_racah_orthogonal_rows():
    j123 = 4
    W = np.array(
        [
            [m1poly.racah_coefficient(j12, j23, j123, 0.6, 0.9, 1.3, 1) for j23 in range(j123 + 1)]
            for j12 in range(j123 + 1)
        ]
    )
    assert np.allclose(W @ W.T, np.eye(j123 + 1), atol=1e-10)


def test_convolution_residuals_pass():
    r = m1poly.conv1_residual(3, 2, 1.2, 2.0, 0.4, 0.6, 1, 0.9, 1)
    assert r["pass"] and r["rel_residual"] < 1e-9
    r = m1poly.conv1_inverse_residual(2, 3, 1.2, 2.0, 0.4, 0.6, 1, 0.9, 1)
    assert r["pass"]
    r = m1poly.conv2_residual(1, 2, 3, 1.0, 1.8, 2.6, 0.3, 0.6, 1, 0.9, 1, 1.3, 1)
    assert r["pass"]
    r = m1poly.conv2_residual(
        1, 2, 3, 1.0, 1.8, 2.6, 0.3, 0.6, 1, 0.9, 1, 1.3, 1,
        direction=m1poly.Conv2Direction.inverse,
    )
    assert r["pass"]
    assert set(r["inputs"]) >= {"j12", "j23", "j123"}


def test_genfun_forms_agree():
    hyper = m1poly.chihara_genfun(1.4, 0.5, 0.7, 0.3)
    bessel = m1poly.chihara_genfun(1.4, 0.5, 0.7, 0.3, form=m1poly.GenFunForm.bessel)
    partial = m1poly.chihara_genfun(
        1.4, 0.5, 0.7, 0.3, form=m1poly.GenFunForm.partial_sum, partial_terms=80
    )
    assert hyper == pytest.approx(bessel, rel=1e-12)
    assert hyper == pytest.approx(partial, rel=1e-10)


def test_coupled_basis_matches_cg_sum():
    total, j, z1, z2, mu1, mu2 = 4, 1, 0.7, 1.1, 0.6, 0.9
    N = total - j
    direct = m1poly.coupled_basis_realization(N, j, z1, z2, mu1, 1, mu2, 1)
    acc = 0.0
    for n1 in range(total + 1):
        n2 = total - n1
        coef = m1poly.cg_coefficient(n1, n2, N, j, mu1, 1, mu2, 1)
        acc += (
            coef
            * z1**n1
            * z2**n2
            / np.sqrt(m1poly.mu_factorial(n1, mu1) * m1poly.mu_factorial(n2, mu2))
        )
    assert direct == pytest.approx(acc, rel=1e-10)


def test_bilinear_residual():
    r = m1poly.bilinear_genfun_residual(1.2, 2.0, 0.4, 0.3, 0.25, 0.6, 1, 0.9, 1)
    assert r["pass"] and r["abs_residual"] < 1e-7


def test_grams():
    G = m1poly.chihara_gram(4, 0.7, 0.3)
    assert np.allclose(G, np.eye(5), atol=1e-8)
    G = m1poly.bigjacobi_gram(3, 0.5, 1.2, 0.3)
    off = G - np.diag(np.diag(G))
    assert np.max(np.abs(off)) < 1e-8 * np.max(np.diag(G))
    for basis in (m1poly.TwoVarBasis.coupled, m1poly.TwoVarBasis.uncoupled):
        G = m1poly.twovar_gram(3, 0.4, 0.6, 1, 0.9, 1, basis=basis)
        assert np.allclose(G, np.eye(G.shape[0]), atol=1e-8)
