# SPDX-License-Identifier: Apache-2.0
import math

import numpy as np
import pytest

import iftr


def test_params_and_validation():
    p = iftr.IftrParams(K=15, Delta=0.9, m1=2, m2=10)
    assert p.K == 15 and p.mean_snr == 1.0
    assert iftr.IftrParams.from_json(p.to_json()) == p
    with pytest.raises(iftr.ValidationError):
        iftr.IftrParams(K=-1)
    with pytest.raises(ValueError):
        iftr.IftrParams(K=1, Delta=2)


def test_mgf_reference():
    p = iftr.IftrParams(K=15, Delta=0.5, m1=3, m2=2)
    assert iftr.mgf(p, -1.0) == pytest.approx(0.44519142060085371894, rel=1e-12)


def test_pdf_cdf_arrays():
    p = iftr.IftrParams(K=0, m1=1, m2=1, mean_snr=2.0)
    x = np.array([0.1, 1.0, 5.0])
    assert np.allclose(iftr.pdf(p, x), 0.5 * np.exp(-0.5 * x), rtol=1e-9)
    assert np.allclose(iftr.cdf(p, x), -np.expm1(-0.5 * x), rtol=1e-9)
    assert iftr.ccdf(p, np.array([40.0]))[0] == pytest.approx(math.exp(-20.0), rel=1e-6)
    r = np.linspace(0.2, 2.0, 4)
    q = iftr.IftrParams(K=15, Delta=0.9, m1=2, m2=10)
    assert np.allclose(iftr.pdf(q, r, domain="envelope"), 2 * r * iftr.pdf(q, r ** 2), rtol=1e-12)
    assert iftr.pdf(q, np.zeros((2, 2))).shape == (2, 2)


def test_sample_deterministic():
    p = iftr.IftrParams(K=15, Delta=0.9, m1=2, m2=10)
    a = iftr.sample(p, 100000, seed=3)
    b = iftr.sample(p, 100000, seed=3, threads=2)
    assert np.array_equal(a, b)
    assert a.mean() == pytest.approx(1.0, rel=0.02)
    v = iftr.sample(p, 10, seed=3, output="complex-voltage")
    assert v.dtype == np.complex128
    assert np.allclose(np.abs(v) ** 2, a[:10])
    with pytest.raises(iftr.ValidationError):
        iftr.sample(p, 0)


def test_ber_and_outage():
    ray = iftr.IftrParams(K=0, m1=1, m2=1, mean_snr=10.0)
    assert iftr.ber(ray)["value"] == pytest.approx(0.5 * (1 - math.sqrt(10 / 11)), abs=1e-10)
    assert iftr.ber(iftr.IftrParams(K=10, Delta=0.5, m1=1.5, m2=2.5, mean_snr=10.0))["method"] == "mgf-quadrature"
    one = iftr.IftrParams(K=0, m1=1, m2=1)
    assert iftr.outage(one, 2.0) == pytest.approx(1 - math.exp(-3), abs=1e-10)
    assert iftr.outage_asymptotic(iftr.IftrParams(K=0, m1=1, m2=1, mean_snr=100.0), 1.0) == pytest.approx(0.01)


def test_fit_rice():
    s = iftr.sample(iftr.IftrParams(K=6), 20000, seed=2, model="rice")
    r = iftr.fit_samples(s, model="rice", restarts=1)
    assert r["model"] == "rice"
    assert r["params"]["K"] == pytest.approx(6, rel=0.3)
    assert r == iftr.fit_samples(s, model="rice", restarts=1)


def test_presets():
    assert iftr.preset_names() == ["fig1", "fig2", "fig3", "fig4", "fig5"]
    assert iftr.preset("fig5")["rate"] == 2.0
