"""Zeta-side evaluations: Euler products, Mellin-Stieltjes sums, Laplace and
Fourier transforms of the step functions, and the regularized G(s).

All integrals over the enumerated range are exact sums of closed-form piece
integrals: N and psi are step functions, constant between jumps, so each piece
integrates elementarily and the only honest error is the truncation beyond
the enumeration bound B.  Tail models require a declared density a; without
one the result is flagged ``no-tail-model`` rather than silently guessed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1

from .counting import CountingTable
from .errors import DomainError
from .systems import PrimeSequence


@dataclass(frozen=True)
class ZetaResult:
    """A complex evaluation plus a heuristic bound on the omitted tail."""

    value: complex
    method: str  # euler-product | stieltjes | dirichlet-sum
    truncation_bound: float
    prime_bound: float
    tail_model: str = "density"  # density | finite | none

    @property
    def re(self) -> float:
        return self.value.real

    @property
    def im(self) -> float:
        return self.value.imag


def _require_halfplane(s: complex, least: float) -> complex:
    s = complex(s)
    if s.real <= least:
        raise DomainError(f"Re s must exceed {least}, got {s}")
    return s


def zeta_euler(primes: PrimeSequence, s: complex, a: float | None = None) -> ZetaResult:
    """Truncated Euler product prod_{p<B} (1 - p^{-s})^{-1}, Re s > 1.

    The tail model multiplies the missing factors out heuristically: their log
    is about sum_{p>=B} p^{-sigma} ~ a * E1((sigma-1) log B) for a system of
    density a (prime counting ~ a x / log x).
    """
    s = _require_halfplane(s, 1.0)
    t = np.exp(-s * primes.logs)
    value = complex(np.prod(1.0 / (1.0 - t))) if len(primes) else 1.0 + 0.0j
    bound, model = _euler_tail(primes, s.real, a, abs(value))
    return ZetaResult(value, "euler-product", bound, primes.bound, model)


def _euler_tail(primes: PrimeSequence, sigma: float, a, scale: float):
    if primes.exhaustive:
        return 0.0, "finite"
    if a is None:
        return 0.0, "none"
    tail = a * float(exp1((sigma - 1.0) * math.log(primes.bound)))
    return scale * math.expm1(tail), "density"


def neg_logderiv(primes: PrimeSequence, s: complex, a: float | None = None) -> ZetaResult:
    """-zeta'(s)/zeta(s) = sum_{p<B} log p * p^{-s} / (1 - p^{-s}), Re s > 1."""
    s = _require_halfplane(s, 1.0)
    t = np.exp(-s * primes.logs)
    value = complex(np.sum(primes.logs * t / (1.0 - t))) if len(primes) else 0.0 + 0.0j
    if primes.exhaustive:
        bound, model = 0.0, "finite"
    elif a is None:
        bound, model = 0.0, "none"
    else:
        # sum_{p>=B} log p p^{-sigma} ~ a * integral_B^inf x^{-sigma} dx
        sigma = s.real
        bound, model = a * primes.bound ** (1.0 - sigma) / (sigma - 1.0), "density"
    return ZetaResult(value, "euler-product", bound, primes.bound, model)


def _last_e1(table: CountingTable) -> float:
    return abs(table.total_count / table.bound - table.a)


def zeta_dirichlet(table: CountingTable, s: complex) -> ZetaResult:
    """Dirichlet sum over the enumerated integers, density-completed beyond B."""
    s = _require_halfplane(s, 1.0)
    sigma = s.real
    b = table.bound
    value = complex(np.sum(np.exp(-s * table.jump_logs)))
    if table.a is not None:
        value += table.a * b ** (1.0 - s) / (s - 1.0)
        bound = (table.a + _last_e1(table)) * b ** (1.0 - sigma) * abs(s) / (sigma - 1.0)
        model = "density"
    else:
        bound, model = 0.0, "none"
    return ZetaResult(value, "dirichlet-sum", bound, b, model)


def zeta_stieltjes(table: CountingTable, s: complex) -> ZetaResult:
    """s * integral_1^B N(x) x^{-s-1} dx, exact piecewise, plus the density tail.

    Piecewise the integral telescopes to sum n_k^{-s} - N(B) B^{-s}; the tail
    s * a * B^{1-s}/(s-1) completes it assuming N ~ a x beyond B.  Without a
    density the finite part is returned with a linear-growth heuristic bound.
    """
    s = _require_halfplane(s, 1.0)
    sigma = s.real
    b = table.bound
    n = table.total_count
    value = complex(np.sum(np.exp(-s * table.jump_logs))) - n * b ** complex(-s)
    if table.a is not None:
        value += s * table.a * b ** (1.0 - s) / (s - 1.0)
        bound = (table.a + _last_e1(table)) * b ** (1.0 - sigma) * abs(s) / (sigma - 1.0)
        model = "density"
    else:
        bound = abs(s) * n * b ** (-sigma) * (1.0 + 1.0 / (sigma - 1.0))
        model = "none"
    return ZetaResult(value, "stieltjes", bound, b, model)


def laplace_psi(table: CountingTable, s: complex) -> complex:
    """integral_0^{log B} psi(e^u) e^{-su} du, exact piecewise, Re s > 0.

    No tail is added; for identity comparisons against -zeta'/(s zeta) the
    caller should allow psi(B) * B^{-sigma} / sigma for the omitted range.
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError(f"Re s must be positive, got {s}")
    psi_total = float(table.prefix_lambda[-1]) if table.total_count else 0.0
    acc = complex(np.sum(table.lambdas * np.exp(-s * table.jump_logs)))
    return (acc - psi_total * table.bound ** complex(-s)) / s


def g_eval(source, s: complex, a: float | None = None) -> ZetaResult:
    """G(s) = zeta(s) - a/(s-1), direct region Re s > 1.

    ``source`` is a PrimeSequence (Euler product) or a CountingTable
    (Mellin-Stieltjes form, preferred near sigma = 1 where the Euler product
    truncates badly).
    """
    s = complex(s)
    if s == 1:
        raise DomainError("G(s) has the subtraction pole at s = 1")
    if isinstance(source, CountingTable):
        if a is None:
            a = source.a
        if a is None:
            raise ValueError("g_eval requires a density a")
        zr = zeta_stieltjes(source, s)
    else:
        if a is None:
            raise ValueError("g_eval requires a density a")
        zr = zeta_euler(source, s, a)
    return ZetaResult(zr.value - a / (s - 1.0), zr.method, zr.truncation_bound,
                      zr.prime_bound, zr.tail_model)


def fourier_E1_boundary(table: CountingTable, t: float) -> complex:
    """Numerical boundary value G(1+it) = (1+it) E1-hat(t) + a, truncated at B.

    E1-hat(t) = integral_0^{log B} E1(u) e^{-itu} du is computed exactly
    piecewise: on each interval where N = c the integrand is
    (c e^{-u} - a) e^{-itu}, whose two parts integrate in closed form (the
    a-part telescopes across pieces).
    """
    if table.a is None:
        raise ValueError("fourier_E1_boundary requires a declared density a")
    a = table.a
    ub = table.log_bound
    n = table.total_count
    s1 = 1.0 + 1j * t
    part_n = (complex(np.sum(np.exp(-s1 * table.jump_logs))) - n * cmath.exp(-s1 * ub)) / s1
    if t == 0.0:
        part_a = -a * ub
    else:
        part_a = -a * (1.0 - cmath.exp(-1j * t * ub)) / (1j * t)
    e1_hat = part_n + part_a
    return s1 * e1_hat + a


@dataclass(frozen=True)
class BoundaryScan:
    """Samples of G(1+it) plus the widest symmetric floor-clearing interval."""

    ts: np.ndarray
    values: np.ndarray
    floor: float
    zero_free_halfwidth: float


def boundary_scan(table: CountingTable, t_max: float, points: int = 201,
                  floor: float = 1e-3) -> BoundaryScan:
    """Scan |G(1+it)| on a symmetric grid and report the largest interval
    around t = 0 on which it stays above ``floor``.  Diagnostic evidence for
    the zero-free radius, not a proof.
    """
    ts = np.linspace(-t_max, t_max, points)
    vals = np.array([fourier_E1_boundary(table, float(t)) for t in ts])
    ok = np.abs(vals) > floor
    abs_ts = np.abs(ts)
    if np.all(ok):
        halfwidth = float(t_max)
    else:
        cutoff = float(np.min(abs_ts[~ok]))
        inside = abs_ts[abs_ts < cutoff]
        halfwidth = float(np.max(inside)) if inside.size else 0.0
    return BoundaryScan(ts, vals, floor, halfwidth)
