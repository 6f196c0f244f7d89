# SPDX-License-Identifier: Apache-2.0
"""Statistics, simulation, link performance and fitting for IFTR fading channels."""

import json

from ._iftr import (
    IftrParams,
    IoError,
    NumericalError,
    ValidationError,
    __version__,
    ber,
    ccdf,
    cdf,
    cdf_asymptotic_slope,
    mgf,
    outage,
    outage_asymptotic,
    pdf,
    preset,
    preset_names,
    sample,
)
from . import _iftr


def fit_cdf(x, cdf_values, domain="snr", model="iftr", compare=False, fit_scale=False, omega=1.0,
            restarts=4, seed=1, m1_max=60):
    """Fit a model family to empirical CDF points; returns a dict (a list of dicts with compare=True)."""
    return json.loads(_iftr._fit_cdf(list(map(float, x)), list(map(float, cdf_values)), domain, model,
                                     compare, fit_scale, omega, restarts, seed, m1_max))


def fit_samples(samples, domain="snr", normalize=False, points=40, model="iftr", compare=False,
                fit_scale=False, omega=1.0, restarts=4, seed=1, m1_max=60):
    """Fit a model family to raw samples through their empirical CDF on a quantile grid."""
    return json.loads(_iftr._fit_samples(list(map(float, samples)), domain, normalize, points, model,
                                         compare, fit_scale, omega, restarts, seed, m1_max))


__all__ = [
    "IftrParams", "IoError", "NumericalError", "ValidationError", "__version__", "ber", "ccdf", "cdf",
    "cdf_asymptotic_slope", "fit_cdf", "fit_samples", "mgf", "outage", "outage_asymptotic", "pdf",
    "preset", "preset_names", "sample",
]
