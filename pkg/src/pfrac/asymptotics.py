"""Saddle-point expansion engine.

Everything here feeds the asymptotic evaluation
    Re[ w^{-N} / N^power * (c_0 + c_1/N + ...) ]
whose coefficients come out of the classical steepest-descent recipe: local
power series of the phase p and the amplitude q at the saddle, partial
ordinary Bell polynomials, and the explicit closed form for the descent
coefficients a_{2s}.  The phase p(z) = (zeta(2) - Li2(e^{2 pi i z}))/(2 pi i z)
has its saddle z0 at the dilogarithm zero w0 = w(0, -1) with
e^{-p(z0)} = 1/w0, which is what turns every expansion into powers of w0^{-N}.

All local series are produced by closed-form series arithmetic (exp, log,
reciprocal, integration), never numerical differentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mp, mpc, mpf, pi

from .dilog import (BranchLabel, ConvergenceError, DilogZero, SaddlePoint,
                    _li2_any, find_saddle, find_zero, p_d, q_func, v_func)
from .precision import HPComplex, HPReal, default_precision
from .sequences import bernoulli, binom_half_fraction, stirling2
from .series import TruncatedSeries
from .sine_products import g_ell

__all__ = [
    "bell_partial", "LocalSeriesPair", "local_series", "wojdylo_a2s",
    "u_weight", "vstar_weight", "b_coeffs", "c_coeffs", "family_leading",
    "Expansion", "evaluate_expansion", "a3_quadrature", "saddle_path",
    "path_positivity_check", "decay_exponent",
]


def bell_partial(i: int, j: int, p) -> object:
    """Partial ordinary Bell polynomial B-hat_{i,j}(p_1, p_2, ...).

    p is the coefficient list [p_1, p_2, ...]; the value is the coefficient
    of x^i in (p_1 x + p_2 x^2 + ...)^j.  Exact inputs give exact output.
    """
    if i < 0 or j < 0:
        raise ValueError("need i, j >= 0")
    if j == 0:
        one = Fraction(1) if all(isinstance(c, (int, Fraction)) for c in p) else mpf(1)
        return one if i == 0 else one * 0
    exact = all(isinstance(c, (int, Fraction)) for c in p)
    zero = Fraction(0) if exact else mpc(0)
    base = [zero] + list(p[:i])
    base += [zero] * (i + 1 - len(base))
    poly = [zero] * (i + 1)
    poly[0] = Fraction(1) if exact else mpc(1)
    for _ in range(j):
        new = [zero] * (i + 1)
        for a, ca in enumerate(poly):
            if not ca:
                continue
            for b in range(1, min(len(base) - 1, i - a) + 1):
                if base[b]:
                    new[a + b] += ca * base[b]
        poly = new
    return poly[i]


@dataclass(frozen=True)
class LocalSeriesPair:
    """Local data at a saddle: phase series (from order 2), weight series,
    the saddle itself, and the path direction omega."""
    pSeries: TruncatedSeries
    qSeries: TruncatedSeries
    center: SaddlePoint
    omega: HPComplex


class _Frame:
    """Shared series scaffolding at a saddle point, in eps = z - z*."""

    def __init__(self, saddle: SaddlePoint, depth: int, prec: int):
        self.saddle = saddle
        self.prec = prec
        self.depth = depth
        # cot differentiation and weight products consume window length, so
        # the base series carry a generous margin over the exposed depth
        n = depth + 2 * (depth // 2 + 3)
        with mp.workprec(prec):
            z0 = mpc(saddle.z.value)
            d = saddle.d
            self.z0 = z0
            e0 = mpmath.exp(2j * pi * z0)
            self.w0 = 1 - e0
            # e^{2 pi i z}, 1 - e^{2 pi i z}, log(1 - e^{2 pi i z}), Li2(e^{2 pi i z})
            fact = mpf(1)
            ecoef = [e0]
            for i in range(1, n):
                fact *= i
                ecoef.append(e0 * (2j * pi) ** i / fact)
            W = TruncatedSeries([1 - ecoef[0]] + [-c for c in ecoef[1:]], 0, n, prec=prec)
            self.W = W
            log1w = W.log()
            li2 = (log1w * (-2j * pi)).integrate()._restrict(0, n)
            li2.coeffs[0] = _li2_any(e0)
            zser = TruncatedSeries([z0, mpc(1)] + [mpc(0)] * (n - 2), 0, n, prec=prec)
            self.zser = zser
            numer = TruncatedSeries([pi ** 2 / 6 + 4 * pi ** 2 * d - li2.coeffs[0]]
                                    + [-c for c in li2.coeffs[1:]], 0, n, prec=prec)
            self.P = numer * zser.recip() * (1 / (2j * pi))
            # amplitude q: q^2 = i z / (1 - e^{2 pi i z}), branch from q(z0)
            qsq = (zser * W.recip()) * 1j
            q_at = q_func(z0, prec).value
            self.Q = qsq.sqrt(branch=q_at)
            # cot(pi z) = i - 2i/(1 - e^{2 pi i z})
            invW = W.recip()
            cot = TruncatedSeries([1j - 2j * invW.coeffs[0]] + [-2j * c for c in invW.coeffs[1:]],
                                  0, n, prec=prec)
            self._cot = cot

    def p_core(self) -> TruncatedSeries:
        """p(z) - p(z*), leading with the quadratic term."""
        n = self.depth
        with mp.workprec(self.prec):
            c = list(self.P._restrict(0, n).coeffs)
            c[0] = mpc(0)
            if abs(c[1]) > mpf(2) ** (-self.prec // 2):
                raise ConvergenceError("saddle center is not accurate enough")
            c[1] = mpc(0)
            return TruncatedSeries(c, 0, n, prec=self.prec)

    def g_series(self, ell: int) -> TruncatedSeries:
        """g_l(z) as a series in eps, by differentiating the cot series."""
        with mp.workprec(self.prec):
            cd = self._cot
            for _ in range(2 * ell - 2):
                cd = cd.differentiate() * (1 / pi)
            cd = cd._restrict(0, min(cd.trunc, self.depth))
            if cd.trunc < self.depth:
                raise ValueError("frame depth margin exhausted; rebuild deeper")
            b = Fraction(bernoulli(2 * ell), math.factorial(2 * ell))
            piz = self.zser._restrict(0, cd.trunc) * pi
            pw = TruncatedSeries([mpc(1)] + [mpc(0)] * (cd.trunc - 1), 0, cd.trunc, prec=self.prec)
            for _ in range(2 * ell - 1):
                pw = pw * piz
                pw = pw._restrict(0, cd.trunc)
            out = (pw * cd)._restrict(0, cd.trunc)
            return out * (-mpf(b.numerator) / b.denominator)

    def u_series(self, sigma: int, jmax: int) -> list[TruncatedSeries]:
        """[u_{sigma,0}, ..., u_{sigma,jmax}] as eps-series.

        u_{sigma,j} collects the 1/N^j coefficient of
        exp(2 pi i sigma z / N + sum_l g_l(z)/N^{2l-1}).
        """
        n = self.depth
        with mp.workprec(self.prec):
            terms: dict[int, TruncatedSeries] = {}
            a1 = (self.zser * (2j * pi * sigma))._restrict(0, n) + self.g_series(1)._restrict(0, n)
            terms[1] = a1._restrict(0, n)
            ell = 2
            while 2 * ell - 1 <= jmax:
                terms[2 * ell - 1] = self.g_series(ell)._restrict(0, n)
                ell += 1
            one = TruncatedSeries([mpc(1)] + [mpc(0)] * (n - 1), 0, n, prec=self.prec)
            zero = TruncatedSeries([mpc(0)] * n, 0, n, prec=self.prec)
            out = [one]
            for m in range(1, jmax + 1):
                acc = zero
                for kk, ak in terms.items():
                    if kk <= m:
                        acc = acc + (ak * out[m - kk])._restrict(0, n) * kk
                out.append(acc * (mpf(1) / m))
            return out

    def vstar_series(self, ell: int, jmax: int) -> list[TruncatedSeries]:
        """[v*_{ell,0}, ..., v*_{ell,jmax}]: the weights that collapse the
        binomial combination over sigma into a single expansion, with
        v*_{ell,j} = sum_t Bhat_{ell-1+t, ell-1}(1/1!, 1/2!, ...)
                      (2 pi i z)^{ell-1+t} u_{1, j-t}."""
        n = self.depth
        us = self.u_series(1, jmax)
        with mp.workprec(self.prec):
            tpz = (self.zser * (2j * pi))._restrict(0, n)
            powers = [TruncatedSeries([mpc(1)] + [mpc(0)] * (n - 1), 0, n, prec=self.prec)]
            for _ in range(ell - 1 + jmax):
                powers.append((powers[-1] * tpz)._restrict(0, n))
            out = []
            for j in range(jmax + 1):
                acc = TruncatedSeries([mpc(0)] * n, 0, n, prec=self.prec)
                for t in range(j + 1):
                    bh = (Fraction(math.factorial(ell - 1) * stirling2(ell - 1 + t, ell - 1),
                                   math.factorial(ell - 1 + t)))
                    term = (powers[ell - 1 + t] * us[j - t])._restrict(0, n)
                    acc = acc + term * (mpf(bh.numerator) / bh.denominator)
                out.append(acc)
            return out


@lru_cache(maxsize=64)
def _frame(m: int, d: int, depth: int, prec: int) -> _Frame:
    return _Frame(find_saddle(m, d, prec), depth, prec + 32)


def local_series(saddle: SaddlePoint, weight=None, depth: int = 12,
                 prec: int | None = None) -> LocalSeriesPair:
    """Local phase/amplitude series at a saddle.

    weight selects the amplitude: None for q itself, ("u", sigma, j) for
    q * u_{sigma,j}, ("vstar", ell, j) for q * v*_{ell,j}, or any
    TruncatedSeries in eps to multiply with q.
    """
    prec = default_precision() if prec is None else prec
    frame = _frame(saddle.m, saddle.d, depth, prec)
    with mp.workprec(frame.prec):
        q = frame.Q
        if weight is None:
            w = q
        elif isinstance(weight, TruncatedSeries):
            w = (q * weight)._restrict(0, frame.depth)
        else:
            kind, a, b = weight
            if kind == "u":
                w = (q * frame.u_series(a, b)[b])._restrict(0, frame.depth)
            elif kind == "vstar":
                w = (q * frame.vstar_series(a, b)[b])._restrict(0, frame.depth)
            else:
                raise ValueError(f"unknown weight selector {weight!r}")
        pcore = frame.p_core()
        pcore = TruncatedSeries(pcore.coeffs[2:], 2, pcore.trunc, prec=prec)
    return LocalSeriesPair(pcore, w, frame.saddle, HPComplex(frame.z0, prec))


def wojdylo_a2s(pair: LocalSeriesPair, s: int, prec: int | None = None) -> HPComplex:
    """Descent coefficient

    a_{2s} = (omega / (2 (omega^2 p0)^{1/2})) *
             sum_{i<=2s} q_{2s-i} sum_{j<=i} p0^{-s-j} C(-s-1/2, j) Bhat_{i,j}(p1, ...),
    with the square root chosen so Re((omega^2 p0)^{1/2}) > 0.
    """
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 32):
        p0 = mpc(pair.pSeries.coeff(2))
        omega = mpc(pair.omega.value)
        root = mpmath.sqrt(omega ** 2 * p0)
        if root.real < 0:
            root = -root
        pref = omega / (2 * root)
        plist = [mpc(pair.pSeries.coeff(2 + t)) for t in range(1, 2 * s + 1)]
        total = mpc(0)
        for i in range(0, 2 * s + 1):
            wcoef = mpc(pair.qSeries.coeff(2 * s - i)) if 2 * s - i < pair.qSeries.trunc else mpc(0)
            if not wcoef:
                continue
            inner = mpc(0)
            for j in range(0, i + 1):
                bh = bell_partial(i, j, plist)
                if bh:
                    cf = binom_half_fraction(s, j)
                    inner += p0 ** (-s - j) * (mpf(cf.numerator) / cf.denominator) * bh
            total += wcoef * inner
        return HPComplex(pref * total, prec)


def _u_scalar(sigma, jmax: int, z, prec: int) -> list:
    """u_{sigma,0..jmax}(z) as scalars, same recurrence as the series form."""
    with mp.workprec(prec + 16):
        zv = mpc(z)
        terms = {1: 2j * pi * sigma * zv + g_ell(1, zv, prec=prec + 16).value}
        ell = 2
        while 2 * ell - 1 <= jmax:
            terms[2 * ell - 1] = g_ell(ell, zv, prec=prec + 16).value
            ell += 1
        out = [mpc(1)]
        for m in range(1, jmax + 1):
            acc = mpc(0)
            for kk, ak in terms.items():
                if kk <= m:
                    acc += kk * ak * out[m - kk]
            out.append(acc / m)
        return out


def u_weight(sigma: int, j: int, z, prec: int | None = None) -> HPComplex:
    """u_{sigma,j}(z): 1/N^j coefficient of exp(v(z; N, sigma)); u_{sigma,0} = 1."""
    prec = default_precision() if prec is None else prec
    return HPComplex(_u_scalar(sigma, j, z if not isinstance(z, (HPComplex, HPReal))
                               else z.value, prec)[j], prec)


def vstar_weight(ell: int, j: int, z, prec: int | None = None) -> HPComplex:
    """v*_{ell,j}(z) = sum_t Bhat_{ell-1+t,ell-1}(1/1!,...) (2 pi i z)^{ell-1+t} u_{1,j-t}(z)."""
    if ell < 1:
        raise ValueError("need ell >= 1")
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 16):
        zv = mpc(z) if not isinstance(z, (HPComplex, HPReal)) else mpc(z.value)
        us = _u_scalar(1, j, zv, prec)
        total = mpc(0)
        for t in range(j + 1):
            bh = Fraction(math.factorial(ell - 1) * stirling2(ell - 1 + t, ell - 1),
                          math.factorial(ell - 1 + t))
            total += (mpf(bh.numerator) / bh.denominator) * (2j * pi * zv) ** (ell - 1 + t) * us[j - t]
        return HPComplex(total, prec)


@dataclass(frozen=True)
class Expansion:
    """Asymptotic expansion Re[ base^{-N or -N/2} / N^power * sum_t coeffs[t]/N^t ].

    kind is one of A1-b, C01-c, familyC, familyD, familyE.  familyD uses the
    conjugate-pair square-root base (exponent -N/2), carries the parity of N
    it was built for, evaluates with overall sign -1, and divides by the odd
    number (2 floor(N/2) + 1)^2 instead of N^2; that sign and denominator are
    calibrated to the published m = 1 values at N = 1000 and 1001.
    """
    kind: str
    base: DilogZero
    power: int
    coeffs: tuple
    parity: int | None = None
    half_exponent: bool = False
    sign: int = 1

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "base": {"A": self.base.label.A, "B": self.base.label.B,
                     "w": {"re": mpmath.nstr(self.base.w.value.real, 30),
                           "im": mpmath.nstr(self.base.w.value.imag, 30)}},
            "power": self.power,
            "coeffs": [{"re": mpmath.nstr(mpc(c).real, 30),
                        "im": mpmath.nstr(mpc(c).imag, 30)} for c in self.coeffs],
        }
        if self.parity is not None:
            out["parity"] = self.parity
        return out


@lru_cache(maxsize=64)
def _b_coeff_values(sigma: int, m: int, prec: int) -> tuple:
    saddle = find_saddle(1, 0, prec)
    depth = 2 * m + 4
    out = []
    with mp.workprec(prec + 32):
        for t in range(m):
            total = mpc(0)
            for s in range(t + 1):
                pair = local_series(saddle, ("u", sigma, t - s), depth, prec)
                a2s = wojdylo_a2s(pair, s, prec + 32).value
                total += mpmath.gamma(s + mpf(1) / 2) * a2s
            out.append(-4j * total)
    return tuple(out)


def b_coeffs(sigma: int, m: int, prec: int | None = None) -> Expansion:
    """Expansion coefficients b_t(sigma), t < m, of the dominant simple-pole sum:

    b_t(sigma) = -4i sum_{s<=t} Gamma(s+1/2) a_{2s}(q u_{sigma,t-s}),
    b_0 = 2 z0 e^{-pi i z0}; evaluated against base w(0,-1) and power N^2.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    prec = default_precision() if prec is None else prec
    zero = find_zero(BranchLabel(0, -1), prec=prec)
    return Expansion("A1-b", zero, 2, _b_coeff_values(int(sigma), m, prec))


@lru_cache(maxsize=64)
def _c_coeff_values(ell: int, m: int, prec: int) -> tuple:
    saddle = find_saddle(1, 0, prec)
    depth = 2 * m + 4
    out = []
    with mp.workprec(prec + 32):
        for t in range(m):
            total = mpc(0)
            for s in range(t + 1):
                pair = local_series(saddle, ("vstar", ell, t - s), depth, prec)
                a2s = wojdylo_a2s(pair, s, prec + 32).value
                total += mpmath.gamma(s + mpf(1) / 2) * a2s
            out.append(4j * total)
    return tuple(out)


def c_coeffs(ell: int, m: int, prec: int | None = None) -> Expansion:
    """Expansion coefficients c_{ell,t}, t < m, for the pole-at-1 coefficients:

    c_{ell,t} = 4i sum_{s<=t} Gamma(s+1/2) a_{2s}(q v*_{ell,t-s}),
    c_{ell,0} = -2 z0 e^{-pi i z0} (2 pi i z0)^{ell-1}; base w(0,-1), power ell+1.
    """
    if ell < 1 or m < 1:
        raise ValueError("need ell >= 1 and m >= 1")
    prec = default_precision() if prec is None else prec
    zero = find_zero(BranchLabel(0, -1), prec=prec)
    return Expansion("C01-c", zero, ell + 1, _c_coeff_values(int(ell), m, prec))


def family_leading(tag: str, parity: int | None = None,
                   prec: int | None = None) -> Expansion:
    """Leading-term expansions of the secondary residue families.

    C: coefficient -z3 e^{-pi i z3}/4 against w(1,-3)^{-N},
    E: coefficient -3 z1 e^{-pi i z1}/2 against w(0,-2)^{-N},
    D: coefficient z0 sqrt(2 e^{-pi i z0}(e^{-pi i z0} + (-1)^N)) against
       w(0,-1)^{-N/2}, parity-dependent, with the documented sign and
       odd-denominator convention (see Expansion).
    """
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 32):
        if tag == "C":
            zero = find_zero(BranchLabel(1, -3), prec=prec)
            z3 = find_saddle(3, 1, prec).z.value
            return Expansion("familyC", zero, 2, (-z3 * mpmath.exp(-1j * pi * z3) / 4,))
        if tag == "E":
            zero = find_zero(BranchLabel(0, -2), prec=prec)
            z1 = find_saddle(2, 0, prec).z.value
            return Expansion("familyE", zero, 2, (-3 * z1 * mpmath.exp(-1j * pi * z1) / 2,))
        if tag == "D":
            if parity not in (0, 1):
                raise ValueError("family D needs parity 0 or 1")
            zero = find_zero(BranchLabel(0, -1), prec=prec)
            z0 = find_saddle(1, 0, prec).z.value
            e = mpmath.exp(-1j * pi * z0)
            d0 = z0 * mpmath.sqrt(2 * e * (e + (-1) ** parity))
            return Expansion("familyD", zero, 2, (d0,), parity=parity,
                             half_exponent=True, sign=-1)
    raise ValueError(f"unknown family tag {tag!r}")


def evaluate_expansion(e: Expansion, N: int, m: int | None = None,
                       prec: int | None = None) -> HPReal:
    """Evaluate the m-term truncation of an Expansion at N."""
    m = len(e.coeffs) if m is None else m
    if m > len(e.coeffs):
        raise ValueError(f"only {len(e.coeffs)} coefficients available, m={m} requested")
    if e.parity is not None and N % 2 != e.parity:
        raise ValueError(f"expansion was built for N % 2 == {e.parity}")
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 32):
        w = mpc(e.base.w.value)
        expo = -mpf(N) / 2 if e.half_exponent else -mpf(N)
        base = mpmath.exp(expo * mpmath.log(w))
        series = mpc(0)
        Nf = mpf(N)
        for t in range(m - 1, -1, -1):
            series = series / Nf + mpc(e.coeffs[t])
        denom = mpf(2 * (N // 2) + 1) if e.half_exponent else Nf
        val = e.sign * (base * series).real / denom ** e.power
    return HPReal(val, prec)


# -- contour integration ---------------------------------------------------------

@lru_cache(maxsize=16)
def _gauss_legendre(n: int, prec: int) -> tuple:
    """Nodes and weights on [-1, 1], by Newton on the Legendre recurrence."""
    with mp.workprec(prec + 16):
        nodes, weights = [], []
        for i in range(1, n + 1):
            x = mpf(math.cos(math.pi * (i - 0.25) / (n + 0.5)))
            dp = mpf(1)
            for _ in range(100):
                p0, p1 = mpf(1), x
                for kk in range(2, n + 1):
                    p0, p1 = p1, ((2 * kk - 1) * x * p1 - (kk - 1) * p0) / kk
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < mpf(2) ** (-prec - 8):
                    break
            weights.append(2 / ((1 - x * x) * dp * dp))
            nodes.append(x)
        return tuple(nodes), tuple(weights)


def saddle_path(prec: int | None = None) -> tuple:
    """Polygonal descent path vertices 1.01 -> 1.01c -> 1.49c -> 1.49 with
    c = 1 + i Im(z0)/Re(z0), passing through the saddle z0."""
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 16):
        z0 = find_saddle(1, 0, prec).z.value
        v = z0.imag / z0.real
        c = 1 + 1j * v
        a, b = mpf("1.01"), mpf("1.49")
        return (mpc(a), a * c, b * c, mpc(b))


def path_positivity_check(samples: int = 200, prec: int | None = None) -> dict:
    """Sample Re(p(z) - p(z0)) along the path and Re[-p(z)] on the verticals.

    Returns min_rise (positive means the saddle is the strict path minimum),
    the saddle height U = Re[-p(z0)], and the largest Re[-p] on the two
    vertical edges (expected below 0.06).
    """
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 16):
        verts = saddle_path(prec)
        z0 = find_saddle(1, 0, prec).z.value
        pz0 = p_d(z0, 0, prec).value
        min_rise = mpf("inf")
        vertical_max = mpf("-inf")
        per_edge = max(1, samples // 3)
        for e in range(3):
            a, b = verts[e], verts[e + 1]
            for i in range(1, per_edge + 1):
                z = a + (b - a) * mpf(i) / (per_edge + 1)
                pv = p_d(z, 0, prec).value
                if abs(z - z0) > mpf("1e-6"):
                    min_rise = min(min_rise, (pv - pz0).real)
                if e in (0, 2):
                    vertical_max = max(vertical_max, (-pv).real)
        return {"min_rise": HPReal(min_rise, prec),
                "saddle_height": HPReal((-pz0).real, prec),
                "vertical_max": HPReal(vertical_max, prec)}


def a3_quadrature(N: int, sigma: int, prec: int | None = None,
                  rel_tol=None, base_nodes: int = 40) -> HPReal:
    """(2/N^{3/2}) Im int_P e^{-N p(z)} q(z) e^{v(z;N,sigma)} dz over the
    descent path, by composite Gauss-Legendre per edge, doubling the node
    count until two successive results agree to rel_tol (default 1e-8).
    """
    if N < 131:
        raise ValueError("the truncated integrand needs N >= 131")
    prec = default_precision() if prec is None else prec
    rel_tol = mpf("1e-8") if rel_tol is None else mpf(rel_tol)
    with mp.workprec(prec + 16):
        verts = saddle_path(prec)

        def integrand(z):
            return (mpmath.exp(-N * p_d(z, 0, prec).value)
                    * q_func(z, prec).value
                    * mpmath.exp(v_func(z, N, sigma, prec=prec).value))

        def total(n):
            nodes, weights = _gauss_legendre(n, prec)
            acc = mpc(0)
            for e in range(3):
                a, b = verts[e], verts[e + 1]
                mid, half = (a + b) / 2, (b - a) / 2
                for x, w in zip(nodes, weights):
                    acc += w * half * integrand(mid + half * x)
            return acc

        prev = total(base_nodes)
        n = base_nodes
        for _ in range(4):
            n *= 2
            cur = total(n)
            if abs(cur - prev) <= rel_tol * abs(cur):
                return HPReal(2 / mpf(N) ** mpf("1.5") * cur.imag, prec)
            prev = cur
    raise ConvergenceError("contour quadrature did not converge")


def decay_exponent(Ns, errors) -> float:
    """Least-squares slope of -log(err) against log(N)."""
    xs = [math.log(n) for n in Ns]
    ys = [-math.log(abs(float(e))) for e in errors]
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den
