"""Dilogarithm machinery: principal branch, Clausen's integral, analytically
continued values, certified zeros on non-principal branches, and the
associated saddle points.

The analytically continued dilogarithm on any branch equals
Li2(z) + 4 pi^2 A + 2 pi i B log(z) for integers A, B.  For B != 0 that
expression has a unique zero w(A, B) exactly when -|B|/2 < A <= |B|/2, and
w(A, -B) is the conjugate of w(A, B).  The zero w(0, -1) and its companion
saddle point z0 = 1 + log(1 - w(0,-1))/(2 pi i) drive all the asymptotic
expansions in this package.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf, pi

from .precision import HPComplex, HPReal, default_precision, tolerance
from .sequences import bernoulli_over_factorial


class ConvergenceError(RuntimeError):
    """Newton iteration failed to certify a root."""


def _zeta2():
    return pi ** 2 / 6


def _li2_series(z):
    """Power series sum z^n / n^2, reliable for |z| <= 1/2."""
    zp = mpc(z)
    total = zp
    r = abs(zp)
    if r == 0:
        return total
    # |z|^n < 2^-(prec+8) decides the truncation up front
    nmax = int((mp.prec + 10) / -mpmath.log(r, 2)) + 2
    for n in range(2, nmax + 1):
        zp *= z
        total += zp / (n * n)
    return total


def _li2_log_series(mu, logneg):
    """Li2(e^mu) for |mu| < 2 pi, given the branch value log(-mu).

    Li2(e^mu) = zeta(2) + mu - mu log(-mu) - mu^2/4
                - sum_{k>=1} B_{2k} mu^{2k+1} / (2k (2k)! (2k+1)).
    """
    total = _zeta2() + mu - mu * logneg - mu ** 2 / 4
    mu2 = mu ** 2
    power = mu  # mu^{2k-1}
    eps = mpf(2) ** (-mp.prec - 8)
    k = 1
    while True:
        power *= mu2
        term = bernoulli_over_factorial(k, mp.prec + 16) * power / ((2 * k) * (2 * k + 1))
        total -= term
        if abs(term) < eps:
            break
        k += 1
        if k > 4 * mp.prec:
            raise ConvergenceError("dilogarithm log-series did not converge")
    return total


def li2_principal(z, prec: int | None = None) -> HPComplex:
    """Principal-branch dilogarithm, holomorphic on C minus [1, oo).

    For |z| <= 1/2 the defining power series is summed directly; larger
    arguments are mapped into convergent regions with the inversion and
    reflection functional equations, falling back to the Bernoulli series
    in log(z) on the annulus they cannot reach.  Points on the cut [1, oo)
    are evaluated as the limit from the upper half plane.
    """
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 24):
        z = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
        val = _li2_any(z)
    return HPComplex(val, prec)


def _li2_any(z):
    zeta2 = _zeta2()
    if z == 0:
        return mpc(0)
    if z == 1:
        return mpc(zeta2)
    on_cut = (z.imag == 0 and z.real > 1)
    if abs(z) <= mpf(1) / 2:
        return _li2_series(z)
    if abs(z) >= 2:
        # Li2(z) = -Li2(1/z) - zeta(2) - log^2(-z)/2, limit from above on the cut
        if on_cut:
            logneg = mpmath.log(z.real) - 1j * pi
        else:
            logneg = mpmath.log(-z)
        return -_li2_any(1 / z) - zeta2 - logneg ** 2 / 2
    if abs(1 - z) <= mpf(1) / 2 and not on_cut:
        # Li2(z) = -Li2(1-z) + zeta(2) - log(z) log(1-z)
        return -_li2_any(1 - z) + zeta2 - mpmath.log(z) * mpmath.log(1 - z)
    # annulus: expand around the unit circle in mu = log z
    mu = mpmath.log(z)
    if on_cut:
        logneg = mpmath.log(mu) - 1j * pi
    elif mu.imag == 0 and mu.real > 0:
        logneg = mpmath.log(mu) - 1j * pi
    else:
        logneg = mpmath.log(-mu)
    return _li2_log_series(mu, logneg)


def clausen(theta, prec: int | None = None) -> HPReal:
    """Clausen's integral Cl2(theta) = Im Li2(e^{i theta}); odd, 2pi-periodic."""
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 24):
        t = mpf(theta) if not isinstance(theta, HPReal) else mpf(theta.value)
        twopi = 2 * pi
        t = mpmath.fmod(t, twopi)
        if t > pi:
            t -= twopi
        elif t < -pi:
            t += twopi
        sign = 1
        if t < 0:
            sign, t = -1, -t
        if t == 0:
            return HPReal(mpf(0), prec)
        # Cl2(t) = t - t log t + sum_{r>=1} |B_{2r}| t^{2r+1} / (2r (2r+1)!)
        total = t - t * mpmath.log(t)
        t2 = t * t
        power = t
        eps = mpf(2) ** (-mp.prec - 8)
        r = 1
        while True:
            power *= t2
            term = abs(bernoulli_over_factorial(r, mp.prec + 16)) * power / ((2 * r) * (2 * r + 1))
            total += term
            if term < eps:
                break
            r += 1
        return HPReal(sign * total, prec)


@dataclass(frozen=True)
class BranchLabel:
    """Branch indices (A, B) of the continued dilogarithm."""
    A: int
    B: int

    def admissible(self) -> bool:
        return self.B != 0 and -abs(self.B) / 2 < self.A <= abs(self.B) / 2


@dataclass(frozen=True)
class DilogZero:
    label: BranchLabel
    w: HPComplex
    residual: HPReal


def li2_continued(z, label: BranchLabel | tuple, prec: int | None = None) -> HPComplex:
    """Continued dilogarithm value Li2(z) + 4 pi^2 A + 2 pi i B log(z)."""
    if not isinstance(label, BranchLabel):
        label = BranchLabel(*label)
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 24):
        zv = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
        base = _li2_any(zv)
        val = base + 4 * pi ** 2 * label.A + 2j * pi * label.B * mpmath.log(zv)
    return HPComplex(val, prec)


def _zero_newton(A, B, w, prec):
    steptol = mpf(2) ** (24 - prec)
    for _ in range(200):
        f = _li2_any(w) + 4 * pi ** 2 * A + 2j * pi * B * mpmath.log(w)
        fp = -mpmath.log(1 - w) / w + 2j * pi * B / w
        step = f / fp
        w = w - step
        if abs(step) < steptol:
            return w
    return None


def find_zero(label: BranchLabel | tuple, b: int | None = None,
              prec: int | None = None) -> DilogZero:
    """Certified zero w(A, B) of the continued dilogarithm, by Newton's method.

    Starts near e^{2 pi i A/B}; the A = 0 zeros sit close to 1 just off the
    real axis, so those start at 0.95 e^{-i sign(B) 0.2/|B|}.  A coarse grid
    search over the unit disk backs up a failed start.
    """
    if b is not None:
        label = BranchLabel(int(label), int(b))
    elif not isinstance(label, BranchLabel):
        label = BranchLabel(*label)
    A, B = label.A, label.B
    if not label.admissible():
        raise ValueError(f"no dilogarithm zero for branch (A={A}, B={B})")
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 32):
        if A == 0:
            w0 = mpf("0.95") * mpmath.exp(-1j * mpmath.sign(B) * mpf("0.2") / abs(B))
        else:
            w0 = mpmath.exp(2j * pi * mpf(A) / B)
            if w0.real < 0 and abs(w0.imag) < mpf("0.05"):
                # e^{2 pi i A/B} on the log cut (|B| = 2|A|): rotate off it,
                # toward the half plane holding the zero
                w0 *= mpmath.exp(-1j * mpmath.sign(B) * mpf("0.1"))
        w = _zero_newton(A, B, w0, prec)
        if w is None:
            w = _zero_newton(A, B, w0 * mpmath.exp(-1j * mpmath.sign(B) * mpf("0.15")), prec)
        if w is None:
            w = _grid_fallback(A, B, prec)
        res = abs(_li2_any(w) + 4 * pi ** 2 * A + 2j * pi * B * mpmath.log(w))
        if res >= tolerance(prec):
            raise ConvergenceError(f"zero ({A},{B}) residual {mpmath.nstr(res, 5)} too large")
        return DilogZero(label, HPComplex(w, prec), HPReal(res, prec))


def _grid_fallback(A, B, prec):
    best, bestval = None, mpf("inf")
    for ir in range(1, 20):
        r = mpf(ir) / 20
        for ia in range(48):
            w0 = r * mpmath.exp(2j * pi * (mpf(ia) + mpf(1) / 2) / 48)
            v = abs(_li2_any(w0) + 4 * pi ** 2 * A + 2j * pi * B * mpmath.log(w0))
            if v < bestval:
                best, bestval = w0, v
    w = _zero_newton(A, B, best, prec)
    if w is None:
        raise ConvergenceError(f"Newton failed for branch ({A},{B})")
    return w


def _check_off_cut(z):
    re, im = z.real, z.imag
    if im <= 0 and re == mpmath.floor(re):
        raise ValueError("argument lies on a branch cut (-i oo, n]")


def p_d(z, d: int = 0, prec: int | None = None) -> HPComplex:
    """p_d(z) = (-Li2(e^{2 pi i z}) + zeta(2) + 4 pi^2 d) / (2 pi i z)."""
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 24):
        zv = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
        _check_off_cut(zv)
        val = (-_li2_any(mpmath.exp(2j * pi * zv)) + _zeta2() + 4 * pi ** 2 * d) / (2j * pi * zv)
    return HPComplex(val, prec)


def p_d_prime(z, d: int = 0, prec: int | None = None) -> HPComplex:
    """p_d'(z) = -(p_d(z) - log(1 - e^{2 pi i z})) / z."""
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 24):
        zv = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
        _check_off_cut(zv)
        pv = (-_li2_any(mpmath.exp(2j * pi * zv)) + _zeta2() + 4 * pi ** 2 * d) / (2j * pi * zv)
        val = -(pv - mpmath.log(1 - mpmath.exp(2j * pi * zv))) / zv
    return HPComplex(val, prec)


def p_d_second(z, d: int = 0, prec: int | None = None) -> HPComplex:
    """p_d''(z) = -(2 p_d'(z) + 2 pi i e^{2 pi i z} / (1 - e^{2 pi i z})) / z."""
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 24):
        zv = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
        _check_off_cut(zv)
        e = mpmath.exp(2j * pi * zv)
        pv = (-_li2_any(e) + _zeta2() + 4 * pi ** 2 * d) / (2j * pi * zv)
        pp = -(pv - mpmath.log(1 - e)) / zv
        val = -(2 * pp + 2j * pi * e / (1 - e)) / zv
    return HPComplex(val, prec)


@dataclass(frozen=True)
class SaddlePoint:
    m: int
    d: int
    z: HPComplex
    pValue: HPComplex


def find_saddle(m: int, d: int, prec: int | None = None) -> SaddlePoint:
    """Unique zero z* of p_d' in the strip m - 1/2 < Re z < m + 1/2.

    Constructed from the dilogarithm zero as
    z* = m + log(1 - w(d, -m)) / (2 pi i), then certified by checking that
    p_d'(z*) vanishes and p_d(z*) = log w(d, -m).
    """
    if not BranchLabel(d, -m).admissible():
        raise ValueError(f"no saddle point for (m={m}, d={d})")
    prec = default_precision() if prec is None else prec
    zero = find_zero(BranchLabel(d, -m), prec=prec)
    with mp.workprec(prec + 24):
        w = mpc(zero.w.value)
        zs = m + mpmath.log(1 - w) / (2j * pi)
        target = mpmath.log(w)
        cert = mpf(10) ** (-mpf("0.3") * prec)
        pprime = p_d_prime(zs, d, prec).value
        pval = p_d(zs, d, prec).value
        if abs(pprime) >= cert or abs(pval - target) >= cert:
            raise ConvergenceError(f"saddle ({m},{d}) failed certification")
    return SaddlePoint(m, d, HPComplex(zs, prec), HPComplex(target, prec))


def r_func(z, prec: int | None = None) -> HPComplex:
    """r(z) = Li2(e^{2 pi i z}) / (2 pi i z) + 13 pi i / (12 z) on 1 < Re z < 2."""
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 24):
        zv = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
        val = _li2_any(mpmath.exp(2j * pi * zv)) / (2j * pi * zv) + 13 * pi * 1j / (12 * zv)
    return HPComplex(val, prec)


def q_func(z, prec: int | None = None) -> HPComplex:
    """q(z) = sqrt(z / (2 sin(pi (z - 1)))) e^{-i pi z / 2}, principal root."""
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 24):
        zv = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
        val = mpmath.sqrt(zv / (2 * mpmath.sin(pi * (zv - 1)))) * mpmath.exp(-1j * pi * zv / 2)
    return HPComplex(val, prec)


def v_func(z, N: int, sigma, alpha_cut=None, prec: int | None = None) -> HPComplex:
    """v(z; N, sigma) = 2 pi i sigma z / N + sum_{l=1}^{L-1} g_l(z) / N^{2l-1}.

    L = floor(alpha_cut * N); the default alpha_cut = 0.006 pi e matches the
    truncation used by the integral representation.
    """
    from .sine_products import g_ell
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 24):
        if alpha_cut is None:
            alpha_cut = mpf("0.006") * pi * mpmath.e
        L = int(mpmath.floor(alpha_cut * N))
        if L < 2:
            raise ValueError("alpha_cut * N must give at least L = 2 terms")
        zv = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
        total = 2j * pi * sigma * zv / N
        Nf = mpf(N)
        for ell in range(1, L):
            total += g_ell(ell, zv, prec=prec + 24).value / Nf ** (2 * ell - 1)
    return HPComplex(total, prec)


def r_q_v_eval(z, N: int, sigma, alpha_cut=None, prec: int | None = None):
    """(r(z), q(z), v(z; N, sigma)) for z in the strip 1 < Re z < 3/2."""
    zv = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
    if not (1 < zv.real < mpf(3) / 2):
        raise ValueError("z must satisfy 1 < Re z < 3/2")
    return (r_func(zv, prec), q_func(zv, prec), v_func(zv, N, sigma, alpha_cut, prec))
