"""Scalar special functions backing the fading-ratio closed forms.

Everything here is plain float-in/float-out and reentrant: log-gamma,
regularized incomplete gamma P/Q, log-beta, binomial coefficients, and the
Gauss hypergeometric function 2F1 on the real axis x < 1.

The 2F1 evaluator is tuned for the two argument families this package
actually uses, (m, 2m; 1+m; -z) with z >= 0 and (1, 3m; 2m+1; u) with
u in [0, 1), for shape factors m in [0.5, 4]. Outside those families it
still works for generic real parameters but carries no accuracy guarantee;
a non-converged evaluation is reported through the result flag rather than
returned silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_MAX_TERMS = 6000
_SERIES_TOL = 1e-16
_INT_TOL = 1e-12


@dataclass(frozen=True)
class SpecFunResult:
    """Value of a series evaluation plus convergence diagnostics."""

    value: float
    converged: bool
    term_count: int


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def ln_beta(a: float, b: float) -> float:
    """ln B(a, b) = lnGamma(a) + lnGamma(b) - lnGamma(a+b), a, b > 0."""
    if not (a > 0 and b > 0):
        raise ValueError(f"ln_beta requires a, b > 0, got a={a}, b={b}")
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def binom(n: int, k: int) -> float:
    """Binomial coefficient C(n, k) as a float, exact for moderate n."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binom requires 0 <= k <= n, got n={n}, k={k}")
    return float(math.comb(n, k))


def reg_inc_gamma(a: float, x: float) -> tuple[float, float]:
    """Regularized incomplete gamma pair (P, Q).

    P(a, x) = gamma(a, x)/Gamma(a) is the lower tail, Q = 1 - P the upper.
    Series expansion for x < a + 1, Lentz continued fraction otherwise;
    the split keeps both branches rapidly convergent.
    """
    if not a > 0:
        raise ValueError(f"reg_inc_gamma requires a > 0, got {a}")
    if x < 0:
        raise ValueError(f"reg_inc_gamma requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0, 1.0
    if x < a + 1.0:
        p = _gamma_p_series(a, x)
        return p, 1.0 - p
    q = _gamma_q_contfrac(a, x)
    return 1.0 - q, q


def _gamma_p_series(a: float, x: float) -> float:
    # P(a,x) = x^a e^-x / Gamma(a) * sum_n x^n / (a (a+1) ... (a+n))
    term = 1.0 / a
    total = term
    n = a
    for _ in range(_MAX_TERMS):
        n += 1.0
        term *= x / n
        total += term
        if abs(term) < abs(total) * 1e-17:
            break
    log_pref = a * math.log(x) - x - math.lgamma(a)
    return total * math.exp(log_pref)


def _gamma_q_contfrac(a: float, x: float) -> float:
    # Q(a,x) via the continued fraction of Gamma(a,x), modified Lentz.
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_TERMS):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    log_pref = a * math.log(x) - x - math.lgamma(a)
    if log_pref < -745.0:
        return 0.0
    return math.exp(log_pref) * h


def _near_int(v: float) -> bool:
    return abs(v - round(v)) < _INT_TOL


def _is_nonpositive_int(v: float) -> bool:
    return v < 0.5 and _near_int(v)


def _power_series(a: float, b: float, c: float, x: float) -> SpecFunResult:
    """Direct sum of the defining 2F1 series; terminates exactly when a or b
    is a non-positive integer, otherwise requires |x| comfortably below 1."""
    term = 1.0
    total = 1.0
    for n in range(1, _MAX_TERMS + 1):
        num = (a + n - 1.0) * (b + n - 1.0)
        if num == 0.0:
            return SpecFunResult(total, True, n)
        term *= num / ((c + n - 1.0) * n) * x
        total += term
        if abs(term) <= _SERIES_TOL * max(abs(total), 1e-290):
            return SpecFunResult(total, True, n + 1)
    return SpecFunResult(total, False, _MAX_TERMS)


def _linear_1mx(a: float, b: float, c: float, x: float) -> SpecFunResult:
    # x -> 1-x connection formula, valid only when c-a-b is not an integer.
    s = c - a - b
    g = math.gamma
    r1 = _power_series(a, b, 1.0 - s, 1.0 - x)
    r2 = _power_series(c - a, c - b, 1.0 + s, 1.0 - x)
    coef1 = g(c) * g(s) / (g(c - a) * g(c - b))
    coef2 = g(c) * g(-s) / (g(a) * g(b)) * (1.0 - x) ** s
    value = coef1 * r1.value + coef2 * r2.value
    return SpecFunResult(value, r1.converged and r2.converged,
                         r1.term_count + r2.term_count)


def gauss_2f1(a: float, b: float, c: float, x: float) -> SpecFunResult:
    """Gauss hypergeometric 2F1(a, b; c; x) for real parameters, x < 1.

    Evaluation strategy: direct power series for |x| <= 0.5; the Pfaff
    transformation maps x < -0.5 into (0, 1); for x in (0.5, 1) the 1-x
    connection formula is used. When a Pfaff image has a terminating
    series (c-a or c-b a non-positive integer) that exact route is taken
    first. The degenerate connection case (c-a-b integer) falls back to
    evaluating at c +- delta and averaging; if the two perturbed values
    disagree the result is flagged non-converged rather than trusted.
    """
    if _is_nonpositive_int(c) or c == 0.0:
        raise ValueError(f"gauss_2f1 pole: c={c} is a non-positive integer")
    if x >= 1.0:
        raise ValueError(f"gauss_2f1 requires x < 1, got {x}")
    if x == 0.0:
        return SpecFunResult(1.0, True, 1)
    if _is_nonpositive_int(a) or _is_nonpositive_int(b):
        return _power_series(a, b, c, x)

    if x < 0.0:
        w = x / (x - 1.0)  # in (0, 1)
        omx = 1.0 - x
        if _is_nonpositive_int(c - b):
            r = _power_series(a, c - b, c, w)
            return SpecFunResult(omx ** -a * r.value, r.converged, r.term_count)
        if _is_nonpositive_int(c - a):
            r = _power_series(c - a, b, c, w)
            return SpecFunResult(omx ** -b * r.value, r.converged, r.term_count)
        r = gauss_2f1(a, c - b, c, w)
        return SpecFunResult(omx ** -a * r.value, r.converged, r.term_count)

    if x <= 0.5:
        return _power_series(a, b, c, x)

    # x in (0.5, 1): prefer an exact terminating Pfaff image
    w = x / (x - 1.0)  # negative
    omx = 1.0 - x
    if _is_nonpositive_int(c - b):
        r = _power_series(a, c - b, c, w)
        return SpecFunResult(omx ** -a * r.value, r.converged, r.term_count)
    if _is_nonpositive_int(c - a):
        r = _power_series(c - a, b, c, w)
        return SpecFunResult(omx ** -b * r.value, r.converged, r.term_count)
    if not _near_int(c - a - b):
        return _linear_1mx(a, b, c, x)

    # degenerate connection: perturb c, average the two sides
    delta = 1e-8 * max(1.0, abs(c))
    lo = _linear_1mx(a, b, c - delta, x)
    hi = _linear_1mx(a, b, c + delta, x)
    value = 0.5 * (lo.value + hi.value)
    spread = abs(hi.value - lo.value)
    ok = lo.converged and hi.converged and spread <= 1e-6 * max(abs(value), 1e-290)
    return SpecFunResult(value, ok, lo.term_count + hi.term_count)
