"""Exact and semi-exact computations around the restricted partition
generating function: Farey pole enumeration, residues of
Q(z; N, sigma) = e^{2 pi i sigma z} / prod_{j<=N} (1 - e^{2 pi i j z}),
conversions between the two coefficient families, restricted partition
counts, the dominant simple-pole sums, and a high-precision Laurent
oracle for the coefficients at the pole q = 1.

The Laurent oracle uses the closed form
prod_{j<=N}(1 - e^{jx}) = (-1)^N N! x^N exp(Phat(x)),
Phat(x) = S_1(N) x/2 + sum_k B_{2k} S_{2k}(N) x^{2k} / (2k (2k)!),
with S_r(N) = sum_{j<=N} j^r, so a single series exponential produces every
coefficient; it is validated by re-running with 64 extra bits.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

import mpmath
from mpmath import mp, mpc, mpf, pi

from .precision import HPComplex, HPReal, default_precision
from .sequences import bernoulli_over_factorial, power_sum_table

__all__ = [
    "FareyFraction", "farey", "p_restricted", "q_simple", "q_general",
    "residue_sum", "c_from_q", "q_from_c", "a1_sum", "FamilySelector",
    "family_sum", "c01l_exact", "q01_exact", "principal_part",
    "reconstruct_product", "sylvester_wave", "residue_report",
    "PrecisionLossError",
]


class PrecisionLossError(RuntimeError):
    """Cancellation destroyed more than the allowed share of working bits."""


@dataclass(frozen=True, order=True)
class FareyFraction:
    h: int
    k: int

    def __post_init__(self):
        if not (0 <= self.h < self.k) or gcd(self.h, self.k) != 1:
            raise ValueError(f"{self.h}/{self.k} is not a reduced fraction in [0, 1)")

    def __str__(self):
        return f"{self.h}/{self.k}"


def farey(N: int) -> list[FareyFraction]:
    """Farey fractions of order N in [0, 1), ascending (Stern-Brocot steps)."""
    if N < 1:
        raise ValueError("need N >= 1")
    out = [FareyFraction(0, 1)]
    if N == 1:
        return out
    a, b, c, d = 0, 1, 1, N
    while (c, d) != (1, 1):
        out.append(FareyFraction(c, d))
        step = (N + b) // d
        a, b, c, d = c, d, step * c - a, step * d - b
    return out


@dataclass(frozen=True)
class ResidueRequest:
    """A pole of Q(z; N, sigma) at frac = h/k together with its order.

    The order s = floor(N/k) is equivalent to N/(s+1) < k <= N/s.
    """
    frac: FareyFraction
    N: int
    sigma: int
    poleOrder: int = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.N < 1 or self.frac.k > self.N:
            raise ValueError("pole requires 1 <= k <= N")
        s = self.N // self.frac.k
        if self.poleOrder is None:
            object.__setattr__(self, "poleOrder", s)
        elif self.poleOrder != s:
            raise ValueError(f"pole order must be {s}, got {self.poleOrder}")

    def residue(self, prec: int | None = None) -> HPComplex:
        return q_general(self.frac.h, self.frac.k, self.sigma, self.N, prec)


_partition_lock = threading.Lock()
_partition_tables: dict[int, list[int]] = {}


def p_restricted(N: int, n: int) -> int:
    """Partitions of n into at most N parts, by the bounded-part DP (exact)."""
    if N < 0 or n < 0:
        raise ValueError("need N, n >= 0")
    if N == 0:
        return 1 if n == 0 else 0
    with _partition_lock:
        table = _partition_tables.get(N)
        if table is None or len(table) <= n:
            size = max(n + 1, 2 * len(table) if table else 64)
            table = [1] + [0] * (size - 1)
            for part in range(1, N + 1):
                for amount in range(part, size):
                    table[amount] += table[amount - part]
            _partition_tables[N] = table
        return table[n]


# -- residues -----------------------------------------------------------------

def q_simple(h: int, k: int, sigma, N: int, prec: int | None = None) -> HPComplex:
    """Q_{h k sigma}(N) for a simple pole (N/2 < k <= N), closed form.

    Q = ((-1)^{k+1}/k^2) e^{-pi i h (N^2+N-4 sigma)/(2k)}
        e^{(pi i/2)(2Nh+N+h+k-hk)} prod_{j<=N-k} 1/(2 sin(pi j h/k)),
    with the sine product accumulated in log space.  sigma may be real.
    """
    if not (N / 2 < k <= N):
        raise ValueError("simple-pole residue needs N/2 < k <= N")
    if gcd(h, k) != 1:
        raise ValueError("h/k must be reduced")
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 16):
        log_abs = mpf(0)
        sign = 1
        for j in range(1, N - k + 1):
            r = (j * h) % k
            if (j * h) // k % 2 == 1:
                sign = -sign
            log_abs -= mpmath.log(2 * mpmath.sin(pi * mpf(r) / k))
        val = ((-1) ** (k + 1) * sign / mpf(k) ** 2
               * mpmath.exp(-1j * pi * h * (mpf(N) * N + N - 4 * sigma) / (2 * k))
               * mpmath.exp(1j * pi / 2 * mpf(2 * N * h + N + h + k - h * k))
               * mpmath.exp(log_abs))
    return HPComplex(val, prec)


def _norm_sigma(sigma):
    return sigma if isinstance(sigma, int) else mpmath.mpmathify(sigma)


@lru_cache(maxsize=4096)
def _pole_inverse(h: int, k: int, N: int, wprec: int):
    """Cached Laurent data at z = h/k: pole order s and the coefficients of
    1 / (prod_{mu<=s} E(mu k y) * prod_{k|j false, j<=N} (1 - zeta^j e^{jy}))
    to order y^{s-1}, where y = 2 pi i (z - h/k) and E(x) = (e^x - 1)/x."""
    s = N // k
    n = s  # coefficients y^0 .. y^{s-1}
    with mp.workprec(wprec):
        zpow = [mpmath.exp(2j * pi * mpf(r) / k) for r in range(k)]
        den = [mpc(0)] * n
        den[0] = mpc(1)
        # E(mu k y) factors
        invfact = [mpf(1)]
        for i in range(1, n + 1):
            invfact.append(invfact[-1] / i)
        for mu in range(1, s + 1):
            f = [(mpf(mu * k) ** i) * invfact[i + 1] for i in range(n)]
            den = _sermul(den, f, n)
        # analytic factors
        for j in range(1, N + 1):
            if j % k == 0:
                continue
            zj = zpow[(h * j) % k]
            f = [1 - zj]
            jp = mpf(1)
            for i in range(1, n):
                jp *= j
                f.append(-zj * jp * invfact[i])
            den = _sermul(den, f, n)
        inv = _serinv(den, n)
        return s, tuple(inv)


def _sermul(a, b, n):
    out = [mpc(0)] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        top = min(len(b), n - i)
        for j in range(top):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def _serinv(a, n):
    inv0 = 1 / a[0]
    out = [inv0] + [mpc(0)] * (n - 1)
    for m in range(1, n):
        acc = mpc(0)
        for j in range(1, min(m, len(a) - 1) + 1):
            if a[j]:
                acc += a[j] * out[m - j]
        out[m] = -inv0 * acc
    return out


def _work_prec(prec: int, s: int, N: int) -> int:
    return max(prec + 64, 64 + 8 * s + 2 * max(1, N).bit_length())


def q_general(h: int, k: int, sigma, N: int, prec: int | None = None) -> HPComplex:
    """Q_{h k sigma}(N) = 2 pi i Res_{z=h/k} Q(z; N, sigma), any pole order.

    Expands every factor locally in y = 2 pi i (z - h/k): the s = floor(N/k)
    factors with k | j contribute the pole, everything else stays analytic.
    The final coefficient pick monitors cancellation and retries with doubled
    working precision (three times) before raising PrecisionLossError.
    """
    if not (1 <= k <= N):
        raise ValueError("need 1 <= k <= N")
    if gcd(h, k) != 1 or not 0 <= h < k:
        raise ValueError("h/k must be a reduced fraction in [0, 1)")
    prec = default_precision() if prec is None else prec
    s = N // k
    wprec = _work_prec(prec, s, N)
    for _ in range(4):
        with mp.workprec(wprec):
            _, inv = _pole_inverse(h, k, N, wprec)
            zeta_sig = mpmath.exp(2j * pi * h * _norm_sigma(sigma) / k)
            total = mpc(0)
            largest = mpf(0)
            sigpow = mpf(1)
            fact = mpf(1)
            for i in range(s):
                term = sigpow / fact * inv[s - 1 - i]
                total += term
                largest = max(largest, abs(term))
                sigpow *= sigma
                fact *= i + 1
            scale = abs((-mpf(k)) ** (-s) / mpmath.factorial(s))
            val = zeta_sig * (-mpf(k)) ** (-s) / mpmath.factorial(s) * total
            # absolute error of the convolution ~ 2^-wprec * largest; accept on
            # either retained relative accuracy or the ambient absolute tolerance
            abs_err = largest * mpf(2) ** (8 - wprec)
            rel_ok = total != 0 and abs_err <= abs(total) * mpf(2) ** -prec
            abs_ok = abs_err * scale <= mpf(2) ** (-prec)
            lost = mpmath.log(largest / abs(total), 2) if total != 0 and largest > 0 else mpf(0)
        if largest == 0 or rel_ok or abs_ok:
            return HPComplex(val, prec)
        wprec *= 2
    raise PrecisionLossError(f"residue at {h}/{k} lost {float(lost):.0f} of {wprec} bits")


def residue_sum(N: int, sigma: int, prec: int | None = None) -> HPComplex:
    """Sum of Q_{h k sigma}(N) over all Farey fractions of order N.

    Equals 0 for 0 < sigma < N(N+1)/2, -p_N(-sigma) for sigma <= 0, and
    (-1)^N p_N(sigma - N(N+1)/2) above; summation runs in ascending (k, h)
    order at full precision for reproducibility.
    """
    prec = default_precision() if prec is None else prec
    fractions = sorted(farey(N), key=lambda f: (f.k, f.h))
    with mp.workprec(prec + 16):
        total = mpc(0)
        for f in fractions:
            total += q_general(f.h, f.k, sigma, N, prec + 16).value
    return HPComplex(total, prec)


def c_from_q(h: int, k: int, ell: int, N: int, prec: int | None = None) -> HPComplex:
    """C_{h k ell}(N) = sum_{sigma<=ell} C(ell-1, sigma-1) (-zeta)^{ell-sigma} Q_{h k sigma}(N)."""
    if ell < 1:
        raise ValueError("need ell >= 1")
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 16):
        zeta = mpmath.exp(2j * pi * mpf(h) / k)
        total = mpc(0)
        for sigma in range(1, ell + 1):
            total += (comb(ell - 1, sigma - 1) * (-zeta) ** (ell - sigma)
                      * q_general(h, k, sigma, N, prec + 16).value)
    return HPComplex(total, prec)


def q_from_c(h: int, k: int, sigma: int, N: int, prec: int | None = None) -> HPComplex:
    """Inverse conversion Q_{h k sigma}(N) = sum_{ell<=sigma} C(sigma-1, ell-1) zeta^{sigma-ell} C_{h k ell}(N)."""
    if sigma < 1:
        raise ValueError("need sigma >= 1")
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 16):
        zeta = mpmath.exp(2j * pi * mpf(h) / k)
        total = mpc(0)
        for ell in range(1, sigma + 1):
            total += (comb(sigma - 1, ell - 1) * zeta ** (sigma - ell)
                      * c_from_q(h, k, ell, N, prec + 16).value)
    return HPComplex(total, prec)


# -- dominant simple-pole sums -------------------------------------------------

@lru_cache(maxsize=512)
def _a1_sum_cached(N: int, sigma: int, prec: int) -> mpf:
    with mp.workprec(prec + 16):
        total = mpf(0)
        for k in range(N // 2 + 1, N + 1):
            log_abs = mpf(0)
            for j in range(1, N - k + 1):
                log_abs -= mpmath.log(2 * mpmath.sin(pi * mpf(j) / k))
            term = (2 * (-1) ** k / mpf(k) ** 2
                    * mpmath.exp(1j * pi / 2 * ((-mpf(N) * N - N + 4 * sigma) / k + 3 * N))
                    * mpmath.exp(log_abs))
            total += term.imag
        return +total


def a1_sum(N: int, sigma: int, prec: int | None = None) -> HPReal:
    """Simple-pole family sum over N/2 < k <= N, h in {1, k-1}:

    Im sum_k (2 (-1)^k / k^2) e^{(i pi/2)[(-N^2-N+4 sigma)/k + 3N]} prod^{-1}(1/k)_{N-k},
    with the reciprocal sine products kept in log space.
    """
    if N < 2:
        raise ValueError("need N >= 2")
    prec = default_precision() if prec is None else prec
    return HPReal(_a1_sum_cached(N, int(sigma), prec), prec)


@dataclass(frozen=True)
class FamilySelector:
    """One of the dominant residue families:

    A: N/2 < k <= N,       h in {1, k-1}          (simple poles)
    C: N/2 < k <= N odd,   h in {2, k-2}          (simple poles)
    D: N/2 < k <= N odd,   h in {(k-1)/2, (k+1)/2} (simple poles)
    E: N/3 < k <= N/2,     h in {1, k-1}          (double poles)
    """
    tag: str
    N: int

    def fractions(self) -> list[FareyFraction]:
        N = self.N
        out = set()
        if self.tag in ("A", "C", "D"):
            for k in range(N // 2 + 1, N + 1):
                if self.tag == "A":
                    hs = (1, k - 1)
                elif k % 2 == 0:
                    continue
                elif self.tag == "C":
                    hs = (2, k - 2)
                else:
                    hs = ((k - 1) // 2, (k + 1) // 2)
                for h in hs:
                    if 1 <= h < k and gcd(h, k) == 1:
                        out.add(FareyFraction(h, k))
        elif self.tag == "E":
            for k in range(N // 3 + 1, N // 2 + 1):
                for h in (1, k - 1):
                    if 1 <= h < k and gcd(h, k) == 1:
                        out.add(FareyFraction(h, k))
        else:
            raise ValueError(f"unknown family tag {self.tag!r}")
        return sorted(out, key=lambda f: (f.k, f.h))


def family_sum(sel: FamilySelector, sigma: int, prec: int | None = None) -> HPReal:
    """Sum of Q_{h k sigma}(N) over the family; real by conjugate symmetry."""
    prec = default_precision() if prec is None else prec
    fractions = sel.fractions()
    if not fractions:
        raise ValueError(f"family {sel.tag} is empty at N={sel.N}")
    with mp.workprec(prec + 16):
        total = mpc(0)
        for f in fractions:
            if sel.tag == "E":
                total += q_general(f.h, f.k, sigma, sel.N, prec + 16).value
            else:
                total += q_simple(f.h, f.k, sigma, sel.N, prec + 16).value
        if abs(total.imag) > mpf(2) ** (-prec // 2) * (1 + abs(total.real)):
            raise PrecisionLossError(f"family {sel.tag} sum has a large imaginary part")
    return HPReal(total.real, prec)


# -- the Laurent oracle at q = 1 -----------------------------------------------

@lru_cache(maxsize=16)
def _laurent_core(N: int, wprec: int) -> tuple:
    """Coefficients of exp(-Phat(x)) to order x^{N-1} at wprec bits."""
    S = power_sum_table(max(N - 1, 1), N)
    with mp.workprec(wprec):
        n = N
        f = [mpf(0)] * n
        if n > 1:
            f[1] = -mpf(S[1]) / 2
        for kk in range(1, (n - 1) // 2 + 1):
            f[2 * kk] = -bernoulli_over_factorial(kk, wprec) * mpf(S[2 * kk]) / (2 * kk)
        g = [mpf(1)] + [mpf(0)] * (n - 1)
        for m in range(1, n):
            acc = mpf(0)
            for kk in range(1, m + 1):
                fk = f[kk]
                if fk:
                    acc += kk * fk * g[m - kk]
            g[m] = acc / m
        return tuple(g)


def _c01l_at(N: int, ell: int, wprec: int) -> mpf:
    g = _laurent_core(N, wprec)
    with mp.workprec(wprec):
        # numerator e^x (e^x - 1)^{ell-1} = sum_i C(ell-1, i) (-1)^{ell-1-i} e^{(i+1)x}
        val = mpf(0)
        invfact = [mpf(1)]
        for i in range(1, N + 1):
            invfact.append(invfact[-1] / i)
        for a in range(N):
            num_a = mpf(0)
            for i in range(ell):
                num_a += comb(ell - 1, i) * (-1) ** (ell - 1 - i) * mpf(i + 1) ** a
            if num_a:
                val += num_a * invfact[a] * g[N - 1 - a]
        return (-1) ** N / mpmath.factorial(N) * val


def c01l_exact(N: int, ell: int, precision: int | None = None) -> HPReal:
    """C_{0 1 ell}(N): coefficient of (q-1)^{-ell} in prod_{j<=N} 1/(1-q^j).

    Evaluated as (-1)^N/N! [x^{N-1}] e^x (e^x-1)^{ell-1} exp(-Phat(x)) (see
    module docstring); each value is validated by recomputing with 64 extra
    bits, doubling the working precision when the two runs disagree.
    """
    if not 1 <= ell <= N:
        raise ValueError("need 1 <= ell <= N")
    precision = (512 if N > 400 else default_precision()) if precision is None else precision
    wprec = precision
    for _ in range(4):
        v1 = _c01l_at(N, ell, wprec)
        v2 = _c01l_at(N, ell, wprec + 64)
        with mp.workprec(wprec + 64):
            err = abs(v1 - v2)
            good = err <= abs(v2) * mpf(2) ** (-48) if v2 != 0 else err == 0
        if good:
            return HPReal(v2, precision)
        wprec *= 2
    raise PrecisionLossError(f"Laurent oracle unstable at N={N}, ell={ell}")


def q01_exact(N: int, sigma: int, prec: int | None = None) -> HPReal:
    """Q_{0 1 sigma}(N) = (-1)^N/N! [x^{N-1}] exp(sigma x - Phat(x)) (real)."""
    prec = default_precision() if prec is None else prec
    g = _laurent_core(N, prec + 64)
    with mp.workprec(prec + 64):
        val = mpf(0)
        invfact = mpf(1)
        sp = mpf(1)
        for a in range(N):
            if a:
                invfact /= a
                sp *= sigma
            val += sp * invfact * g[N - 1 - a]
        return HPReal((-1) ** N / mpmath.factorial(N) * val, prec)


# -- reconstruction and waves ---------------------------------------------------

def principal_part(h: int, k: int, N: int, prec: int | None = None) -> list[HPComplex]:
    """[C_{h k 1}(N), ..., C_{h k s}(N)] for the pole of order s at h/k."""
    s = N // k
    return [c_from_q(h, k, ell, N, prec) for ell in range(1, s + 1)]


def reconstruct_product(N: int, q, prec: int | None = None) -> HPComplex:
    """Evaluate the full partial-fraction expansion of prod_{j<=N} 1/(1-q^j)
    at the point q, summing every pole's principal part."""
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 16):
        qv = mpc(q)
        total = mpc(0)
        for f in sorted(farey(N), key=lambda fr: (fr.k, fr.h)):
            zeta = mpmath.exp(2j * pi * mpf(f.h) / f.k)
            base = 1 / (qv - zeta)
            power = mpc(1)
            for coeff in principal_part(f.h, f.k, N, prec + 16):
                power *= base
                total += coeff.value * power
    return HPComplex(total, prec)


def sylvester_wave(k: int, N: int, n: int, prec: int | None = None) -> HPReal:
    """Wave W_k(N, n) = -sum_{(h,k)=1, 0<=h<k} Q_{h k (-n)}(N); the waves sum
    to the restricted partition count p_N(n) over k = 1..N."""
    prec = default_precision() if prec is None else prec
    with mp.workprec(prec + 16):
        total = mpc(0)
        for h in range(k):
            if gcd(h, k) == 1:
                total -= q_general(h, k, -n, N, prec + 16).value
    return HPReal(total.real, prec)


def residue_report(N: int, sigma: int, prec: int | None = None, digits: int = 30) -> list[dict]:
    """Rows {h, k, order, re, im} for every pole of Q(z; N, sigma)."""
    rows = []
    for f in sorted(farey(N), key=lambda fr: (fr.k, fr.h)):
        q = q_general(f.h, f.k, sigma, N, prec)
        rows.append({
            "h": f.h,
            "k": f.k,
            "order": N // f.k,
            "re": mpmath.nstr(q.value.real, digits),
            "im": mpmath.nstr(q.value.imag, digits),
        })
    return rows
