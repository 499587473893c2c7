"""Completed Dedekind zeta functions in the critical strip, with ball arithmetic.

The zeta function of each supported field is written as a product of
Dirichlet series that each carry a single gamma factor: zeta_Q itself and
quotients of Dedekind zetas such as zeta_K / zeta_Q, whose coefficients
come from the exact local factors in ``lfunc`` by Moebius inversion.  A
series with completed form

    Lambda(s) = A^s Gamma(k s + m) L(s),   Lambda(s) = Lambda(1 - s)

is evaluated by the incomplete-gamma split at a cutoff c,

    Lambda(s) = sum b_n [(A/n)^s Gamma(k s + m, (n c / A)^(1/k))
                        + (A/n)^(1-s) Gamma(k (1-s) + m, (n / (c A))^(1/k))]

plus the polar terms c^(s-1)/(s-1) - c^s/s for zeta_Q.  The value is
independent of c, which makes c a free consistency check.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Sequence

from flint import acb, arb, ctx

from . import lfunc


class AnalyticError(Exception):
    pass


class PrecisionUnreachable(AnalyticError):
    pass


class EdgeZero(AnalyticError):
    pass


class OverlapUnresolved(AnalyticError):
    pass


class UnsupportedField(AnalyticError):
    pass


DEFAULT_N_CAP = 20000
DOUBLE_ZERO_HEIGHT_CAP = 50.0


# ---------------------------------------------------------------------------
# coefficients

_coeff_lock = threading.Lock()
_coeff_cache: dict[tuple, list[int]] = {}


def _moebius_sieve(N: int) -> list[int]:
    mu = [1] * (N + 1)
    is_comp = bytearray(N + 1)
    for p in range(2, N + 1):
        if not is_comp[p]:
            for m in range(p, N + 1, p):
                if m > p:
                    is_comp[m] = 1
                mu[m] = -mu[m]
            for m in range(p * p, N + 1, p * p):
                mu[m] = 0
    mu[0] = 0
    return mu


def _field_zeta_coeffs(name: str, N: int) -> list[int]:
    """a_1..a_N of zeta_K, index 0 unused."""
    key = ("zeta", name)
    with _coeff_lock:
        have = _coeff_cache.get(key)
        if have is None or len(have) <= N:
            F = lfunc.get_field(name)
            a = lfunc.dirichlet_coefficients(F, "zeta", N).as_integers()
            _coeff_cache[key] = have = [0] + a
        return have


def _quotient_coeffs(name: str, N: int) -> list[int]:
    """Coefficients of zeta_K / zeta_Q."""
    key = ("quot", name)
    with _coeff_lock:
        have = _coeff_cache.get(key)
    if have is not None and len(have) > N:
        return have
    a = _field_zeta_coeffs(name, N)
    mu = _moebius_sieve(N)
    b = [0] * (N + 1)
    for d in range(1, N + 1):
        if mu[d]:
            for m in range(d, N + 1, d):
                b[m] += mu[d] * a[m // d]
    with _coeff_lock:
        _coeff_cache[key] = b
    return b


# ---------------------------------------------------------------------------
# single-gamma pieces


@dataclass(frozen=True)
class Piece:
    label: str
    kind: str  # "R0": Gamma(s/2), "R1": Gamma((s+1)/2), "C": Gamma(s)
    conductor: int
    source: str | None  # None for zeta_Q, else the field whose zeta_K/zeta_Q this is
    polar: bool = False

    @property
    def kappa(self) -> float:
        return 1.0 if self.kind == "C" else 0.5

    @property
    def mu(self) -> float:
        return 0.5 if self.kind == "R1" else 0.0

    def A(self) -> arb:
        q = arb(self.conductor)
        if self.kind == "C":
            return q.sqrt() / (2 * arb.pi())
        return (q / arb.pi()).sqrt()

    def coeffs(self, N: int) -> list[int]:
        if self.source is None:
            return [0] + [1] * N
        return _quotient_coeffs(self.source, N)

    def coefficient_bound(self, n: int) -> float:
        # |b_n| <= d(n) <= 2 sqrt(n) for the degree <= 2 pieces used here
        return 1.0 if self.source is None else 2.0 * math.sqrt(n)


ZETA_Q = Piece("zeta_Q", "R0", 1, None, polar=True)


@dataclass(frozen=True)
class FieldData:
    name: str
    degree: int
    discriminant: int
    signature: tuple
    pieces: tuple  # ((Piece, exponent), ...)


def _quot(name, kind, q):
    return Piece(f"zeta_{name}/zeta_Q", kind, q, name)


FIELDS = {
    "rationals": FieldData("rationals", 1, 1, (1, 0), ((ZETA_Q, 1),)),
    "q_sqrtm3": FieldData("q_sqrtm3", 2, -3, (0, 1), ((ZETA_Q, 1), (_quot("q_sqrtm3", "R1", 3), 1))),
    "q_i": FieldData("q_i", 2, -4, (0, 1), ((ZETA_Q, 1), (_quot("q_i", "R1", 4), 1))),
    "q_cbrt2": FieldData("q_cbrt2", 3, -108, (1, 1), ((ZETA_Q, 1), (_quot("q_cbrt2", "C", 108), 1))),
    "x3m2split": FieldData(
        "x3m2split",
        6,
        -34992,
        (0, 3),
        ((ZETA_Q, 1), (_quot("q_sqrtm3", "R1", 3), 1), (_quot("q_cbrt2", "C", 108), 2)),
    ),
}


# ---------------------------------------------------------------------------
# completed zeta


@dataclass
class ZetaValue:
    Lambda: acb
    zeta: acb

    @property
    def mid(self) -> complex:
        return complex(self.Lambda.mid())

    @property
    def radius(self) -> float:
        return float(self.Lambda.rad())

    def contains_zero(self) -> bool:
        return 0 in self.Lambda


@dataclass
class CompletedZeta:
    field: FieldData
    precision: int = 128
    n_cap: int = DEFAULT_N_CAP

    def __post_init__(self):
        if isinstance(self.field, str):
            if self.field not in FIELDS:
                raise UnsupportedField(f"no analytic data for {self.field!r}")
            self.field = FIELDS[self.field]
        if self.precision < 64:
            raise ValueError("precision must be at least 64 bits")

    @property
    def degree(self) -> int:
        return self.field.degree

    @property
    def discriminant(self) -> int:
        return self.field.discriminant

    @property
    def signature(self) -> tuple:
        return self.field.signature


def _as_acb(s) -> acb:
    if isinstance(s, acb):
        return s
    if isinstance(s, arb):
        return acb(s)
    s = complex(s)
    return acb(arb(s.real), arb(s.imag))  # exact binary values


def _log_term_bound(piece: Piece, n: int, sigma: float, c: float, A: float) -> float:
    """log of a bound for |b_n (A/n)^s Gamma(k s + m, x_n)| with Re s = sigma."""
    k, m = piece.kappa, piece.mu
    x = (n * c / A) ** (1.0 / k)
    alpha = k * sigma + m
    lg = (alpha - 1.0) * math.log(x) - x
    if alpha > 1.0:
        if x <= 2.0 * (alpha - 1.0):
            return math.inf
        lg += math.log(2.0)
    return math.log(piece.coefficient_bound(n)) + sigma * math.log(A / n) + lg


def _log_tail(piece, N, sigma, c, A) -> float:
    """log of a bound for the sum over n > N of the term bounds."""
    total = -math.inf
    prev = None
    n = N + 1
    while True:
        lt = _log_term_bound(piece, n, sigma, c, A)
        if lt == math.inf:
            return math.inf
        total = lt if total == -math.inf else max(total, lt) + math.log1p(math.exp(-abs(total - lt)))
        if prev is not None and lt < prev - 1e-3 and lt < total - 40:
            # geometric remainder with ratio at most exp(lt - prev)
            r = lt - prev
            return total + math.log1p(math.exp(r) / (1 - math.exp(r)))
        prev = lt
        n += 1
        if n > N + 100000:
            return math.inf


def _choose_N(piece, s, c, A, log_target, n_cap) -> tuple[int, float]:
    sig1, sig2 = s.real, 1.0 - s.real
    N = 1
    while True:
        t1 = _log_tail(piece, N, sig1, c, A)
        t2 = _log_tail(piece, N, sig2, 1.0 / c, A)
        tail = max(t1, t2) + math.log(2.0)
        if tail <= log_target:
            return N, tail
        if N >= n_cap:
            raise PrecisionUnreachable(f"{piece.label}: tail bound needs more than {n_cap} terms")
        N = N + max(1, N // 4)


def _piece_lambda(piece: Piece, s: acb, c: arb, log_target: float, n_cap: int) -> acb:
    A = piece.A()
    k, m = piece.kappa, piece.mu
    sm = complex(s.mid())
    N, log_tail = _choose_N(piece, sm, float(c), float(A), log_target, n_cap)
    b = piece.coeffs(N)
    a1 = (s * arb(k) + arb(m))
    a2 = ((1 - s) * arb(k) + arb(m))
    inv_k = arb(1) / arb(k)
    total = acb(0)
    for n in range(1, N + 1):
        if not b[n]:
            continue
        r = A / n
        lr = r.log()
        x1 = (n * c / A) ** inv_k
        x2 = (n / (c * A)) ** inv_k
        term = (s * lr).exp() * acb(x1).gamma_upper(a1) + ((1 - s) * lr).exp() * acb(x2).gamma_upper(a2)
        total += b[n] * term
    if piece.polar:
        lc = c.log()
        total += ((s - 1) * lc).exp() / (s - 1) - (s * lc).exp() / s
    err = arb(0, arb(math.exp(log_tail)) if log_tail > -1e4 else arb(0))
    return total + acb(err, err)


def _piece_gamma(piece: Piece, s: acb) -> acb:
    return (s * piece.A().log()).exp() * (s * piece.kappa + piece.mu).gamma()


def _field_gamma(f: FieldData, s: acb) -> acb:
    r1, r2 = f.signature
    n = f.degree
    base = arb(abs(f.discriminant)) / (arb(4) ** r2 * arb.pi() ** n)
    out = (s / 2 * base.log()).exp()
    if r1:
        out *= (s / 2).gamma() ** r1
    if r2:
        out *= s.gamma() ** r2
    return out


def _log_scale(piece: Piece, s: complex) -> float:
    k, m = piece.kappa, piece.mu
    A = float(piece.A())
    from mpmath import loggamma

    return s.real * math.log(A) + float(loggamma(k * s + m).real)


def zeta_value(Z: CompletedZeta, s, precision: int | None = None, c: float = 1.0) -> ZetaValue:
    """Enclosures of Lambda_K(s) and zeta_K(s).

    Every single-gamma factor L is computed with width at most 2^(-precision/2)
    relative to its own scale, so zeta_K is determined to about that many bits.
    """
    P = precision or Z.precision
    s = _as_acb(s)
    sm = complex(s.mid())
    # ball arguments enclose a whole region; only point values carry a width target
    point = s.rad() == 0
    if abs(sm - 1) < 1e-12 or abs(sm) < 1e-12:
        raise ValueError("s must avoid the poles 0 and 1")
    attempts = 0
    while True:
        wp = P + 40 + int(1.6 * math.pi * abs(sm.imag) / (2 * math.log(2))) + 64 * attempts
        old = ctx.prec
        ctx.prec = wp
        try:
            zeta_K = acb(1)
            ok = True
            for piece, e in Z.field.pieces:
                log_target = (-P / 2 - 8) * math.log(2) + _log_scale(piece, sm)
                lam = _piece_lambda(piece, s, c if isinstance(c, arb) else arb(float(c)), log_target, Z.n_cap)
                L = lam / _piece_gamma(piece, s)
                if not L.is_finite() or (point and float(L.rad()) > 2.0 ** (-P / 2)):
                    ok = False
                zeta_K *= L**e
            if ok:
                return ZetaValue(_field_gamma(Z.field, s) * zeta_K, zeta_K)
        finally:
            ctx.prec = old
        attempts += 1
        if attempts > 2:
            raise PrecisionUnreachable(f"could not reach 2^-{P // 2} at s = {sm}")


def _real_sign(Z: CompletedZeta, t, c: float = 1.0) -> int:
    """Sign of the real number Lambda(1/2 + it), 0 when the enclosure meets zero."""
    v = zeta_value(Z, complex(0.5, t), c=c).Lambda.real
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _arb(x) -> arb:
    return x if isinstance(x, arb) else arb(float(x))


# ---------------------------------------------------------------------------
# argument principle


def _right_abscissa(n: int) -> float:
    # |zeta_K(s) - 1| <= zeta(sigma)^n - 1 < 1/2 keeps arg zeta_K principal
    from mpmath import zeta

    sigma = 2.0
    while float(zeta(sigma)) ** n - 1 >= 0.5:
        sigma += 0.5
    return sigma


def _arg_track(Z, t: float, sigma_from: float, sigma_to: float, z_from: acb) -> tuple[float, acb]:
    """Continuous change of arg zeta_K along the horizontal segment at height t."""
    total = 0.0
    sig, z = sigma_from, z_from
    step = (sigma_to - sigma_from) / 8
    while (sigma_to - sig) * (sigma_to - sigma_from) > 1e-15:
        nxt = sig + step
        if (sigma_to - nxt) * (sigma_to - sigma_from) < 0:
            nxt = sigma_to
        znew = zeta_value(Z, complex(nxt, t)).zeta
        if 0 in znew:
            raise EdgeZero(f"zeta_K vanishes near {nxt} + {t}i")
        ratio = znew / z
        if ratio.real > 0 and abs(float(ratio.mid().arg())) < math.pi / 4 and float(ratio.rad()) < 0.1:
            total += float(ratio.mid().arg())
            sig, z = nxt, znew
            step *= 1.5
        else:
            step /= 2
            if abs(step) < 1e-9:
                raise EdgeZero(f"argument tracking stalled at {sig} + {t}i")
    return total, z


def _gamma_arg(Z, s: complex) -> float:
    """Imaginary part of a continuous log of the gamma factor of Lambda_K."""
    from mpmath import loggamma, log, pi, mpf

    f = Z.field
    r1, r2 = f.signature
    base = mpf(abs(f.discriminant)) / (mpf(4) ** r2 * pi**f.degree)
    v = s / 2 * log(base) + r1 * loggamma(s / 2) + r2 * loggamma(s)
    return float(v.imag)


def _edge_ok(Z, t: float) -> bool:
    return _real_sign(Z, t) != 0


def _nudge(Z, t: float) -> float:
    if _edge_ok(Z, t):
        return t
    for k in range(1, 21):
        for cand in (t + k * 1e-3, t - k * 1e-3):
            if cand > 0 and _edge_ok(Z, cand):
                return cand
    raise EdgeZero(f"no zero-free edge near t = {t}")


def zero_count_box(Z: CompletedZeta, t1: float, t2: float) -> int:
    """Zeros of Lambda_K in the strip with t1 < Im s < t2, with multiplicity."""
    if not t2 > t1 >= 0:
        raise ValueError("need t2 > t1 >= 0")
    t1 = max(t1, 0.1)
    if t2 <= t1:
        return 0
    t1, t2 = _nudge(Z, t1), _nudge(Z, t2)
    sR = _right_abscissa(Z.degree)
    ends = []
    for t in (t1, t2):
        zR = zeta_value(Z, complex(sR, t)).zeta
        if not (zR - 1).abs_upper() < 0.75:
            raise EdgeZero("right edge not zero-free")
        d, _ = _arg_track(Z, t, sR, 0.5, zR)
        ends.append((float(zR.mid().arg()), d))
    (a1, d1), (a2, d2) = ends
    # arg zeta along P0 -> P1 is -d1; P1 -> P2 is a2 - a1; P2 -> P3 is d2
    delta = -d1 + (a2 - a1) + d2
    delta += _gamma_arg(Z, complex(0.5, t2)) - _gamma_arg(Z, complex(0.5, t1))
    count = delta / math.pi
    N = round(count)
    if abs(count - N) > 0.05:
        raise EdgeZero(f"winding {count} is not an integer")
    return N


# ---------------------------------------------------------------------------
# zeros on the critical line


@dataclass(frozen=True)
class ZeroReport:
    t: float
    radius: float
    factorMultiplicity: int = 1
    excludedSimpleOverlap: bool = False

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.factorMultiplicity < 1:
            raise ValueError("factorMultiplicity must be at least 1")

    def to_json(self) -> dict:
        return {
            "t": f"{self.t:.12f}",
            "radius": f"{self.radius:.3e}",
            "factorMultiplicity": self.factorMultiplicity,
            "excludedSimpleOverlap": self.excludedSimpleOverlap,
        }


class ZeroList(list):
    """Zero reports plus flags raised while locating them."""

    def __init__(self, items=(), flags=()):
        super().__init__(items)
        self.flags = list(flags)


def _mean_spacing(Z, t: float) -> float:
    f = Z.field
    x = abs(f.discriminant) * (max(t, 2 * math.pi) / (2 * math.pi)) ** f.degree
    return 2 * math.pi / max(math.log(x), 1.0)


def _refine(Z, lo: float, hi: float, slo: int, tol: float) -> tuple[float, float]:
    """Illinois iteration keeping a certified sign-change bracket."""
    flo = float(zeta_value(Z, complex(0.5, lo)).Lambda.real.mid())
    fhi = float(zeta_value(Z, complex(0.5, hi)).Lambda.real.mid())
    side = 0
    while hi - lo > 2 * tol:
        if flo != fhi:
            m = hi - fhi * (hi - lo) / (fhi - flo)
        else:
            m = (lo + hi) / 2
        w = hi - lo
        m = min(max(m, lo + w / 16), hi - w / 16) if w > 64 * tol else (lo + hi) / 2
        sm = _real_sign(Z, m)
        if sm == 0:
            # enclosure meets zero: the root lies within the ball, shrink around it
            lo_n, hi_n = m - tol / 2, m + tol / 2
            if _real_sign(Z, lo_n) == slo and _real_sign(Z, hi_n) == -slo:
                return lo_n, hi_n
            m = (lo + hi) / 2
            sm = _real_sign(Z, m)
            if sm == 0:
                return lo, hi
        fm = float(zeta_value(Z, complex(0.5, m)).Lambda.real.mid())
        if sm == slo:
            lo, flo = m, fm
            if side == -1:
                fhi /= 2
            side = -1
        else:
            hi, fhi = m, fm
            if side == 1:
                flo /= 2
            side = 1
    return lo, hi


def locate_zeros_on_line(Z: CompletedZeta, t1: float, t2: float, tol: float = 1e-6) -> ZeroList:
    t1 = max(t1, 0.1)
    reports, flags = [], []
    t = t1
    s_prev = _real_sign(Z, t)
    while s_prev == 0:
        t += 1e-3
        s_prev = _real_sign(Z, t)
    t_prev = t
    while t_prev < t2:
        h = _mean_spacing(Z, t_prev) / 8
        t = min(t_prev + h, t2)
        s = _real_sign(Z, t)
        while s == 0:
            t = t + 1e-4 if t + 1e-4 <= t2 else t - 1e-4
            s = _real_sign(Z, t)
        if s != s_prev:
            lo, hi = _refine(Z, t_prev, t, s_prev, tol)
            reports.append(ZeroReport((lo + hi) / 2, max((hi - lo) / 2, 1e-15)))
        t_prev, s_prev = t, s
    try:
        count = zero_count_box(Z, t1, t2)
        if count != len(reports):
            flags.append(f"PossibleOffLineOrMultiple: box count {count}, sign changes {len(reports)}")
    except EdgeZero as exc:
        flags.append(f"BoxCountUnavailable: {exc}")
    return ZeroList(reports, flags)


# ---------------------------------------------------------------------------
# double zeros of the S3 field


@dataclass
class DoubleZeroAnalysis:
    reports: list
    shared: list  # zeros of zeta_Q (sign change certified on the interval)
    unresolved: list


def _zeta_q_on_interval(t: float, r: float, precision: int) -> acb | None:
    """Enclosure of zeta_Q over 1/2 + i[t - r, t + r], or None if it disagrees
    with the incomplete-gamma value at the midpoint."""
    old = ctx.prec
    ctx.prec = precision
    try:
        ball = acb(arb(0.5), arb(t, r)).zeta()
    finally:
        ctx.prec = old
    own = zeta_value(CompletedZeta("rationals", precision), complex(0.5, t)).zeta
    return ball if ball.overlaps(own) else None


def double_zero_analysis(heightMax: float, precision: int = 128, cap: float = DOUBLE_ZERO_HEIGHT_CAP) -> DoubleZeroAnalysis:
    if heightMax > cap:
        raise ValueError(f"heightMax exceeds the cap {cap}")
    ZK = CompletedZeta("q_cbrt2", precision)
    ZQ = CompletedZeta("rationals", precision)
    reports, shared, unresolved = [], [], []
    if heightMax <= 0.1:
        return DoubleZeroAnalysis(reports, shared, unresolved)
    for z in locate_zeros_on_line(ZK, 0.1, heightMax):
        # the sign change of Lambda_K brackets a zero of zeta_K = zeta_Q * (zeta_K / zeta_Q)
        zq = _zeta_q_on_interval(z.t, z.radius, precision)
        if zq is not None and 0 not in zq:
            reports.append(ZeroReport(z.t, z.radius, 2, True))
            continue
        lo, hi = z.t - 1e-3, z.t + 1e-3
        if _real_sign(ZQ, lo) * _real_sign(ZQ, hi) == -1:
            shared.append(z)
        else:
            unresolved.append(z)
    return DoubleZeroAnalysis(reports, shared, unresolved)


def double_zero_report(heightMax: float, precision: int = 128) -> list:
    """Certified zeros of zeta_L (L the splitting field of x^3 - 2) of order >= 2.

    Each comes from a zero of zeta_K / zeta_Q, K = Q(2^(1/3)), at which zeta_Q
    is shown not to vanish on the whole uncertainty interval; that quotient
    enters zeta_L squared.  Zeros that cannot be separated from zeta_Q are
    skipped and logged.
    """
    import logging

    res = double_zero_analysis(heightMax, precision)
    for z in res.unresolved:
        logging.getLogger(__name__).warning("OverlapUnresolved at t = %.9f", z.t)
    return res.reports
