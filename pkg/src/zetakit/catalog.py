"""Machine-readable registry of the catalogued series identities.

Every entry carries a term generator, a closed form, and a rigorous tail
bound.  Identities whose sum only yields the target constant after an affine
step (the zeta(3) family) also carry offset/scale so callers can assemble
`offset + scale * partial_sum`.

Status semantics: "as-printed" entries verify against their published right
hand side; "corrected" entries store both the published variant (which fails,
by a documented margin) and the corrected one consistent with the derivation
chain; "representation" entries are function expansions consumed by the
Clausen evaluator rather than checkable scalar identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .exact import zeta_e_exact, zeta_even_exact
from .specfun import (
    EvalResult,
    ZETA2,
    catalan,
    dirichlet_beta,
    euler_gamma,
    riemann_zeta,
    zeta_even_float,
    zeta_even_m1_float,
    zeta_minus_one,
)
from .summation import CompensatedSum

__all__ = [
    "CatalogKey",
    "IdentityDescriptor",
    "IdentitySummary",
    "registry",
    "list_identities",
    "get",
    "term",
    "closed_form",
    "printed_closed_form",
    "partial_sum",
    "assembled_sum",
    "tail_bound",
    "STATUSES",
]

STATUSES = ("as-printed", "corrected", "representation")

TermFn = Callable[[Optional[int], int], float]
ClosedFn = Callable[[Optional[int]], float]
TailFn = Callable[[Optional[int], int], float]


@dataclass(frozen=True)
class CatalogKey:
    id: str
    param: int | None = None

    def label(self) -> str:
        if self.param is None:
            return self.id
        return f"{self.id}({self.param})"


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    paper_eq: str
    status: str
    description: str
    start_index: int = 1
    param_name: str | None = None  # None for scalar entries
    param_min: int = 1
    param_domain: str = ""
    targets: tuple[str, ...] = ()
    term_fn: TermFn | None = None
    closed_fn: ClosedFn | None = None
    printed_closed_fn: ClosedFn | None = None
    tail_fn: TailFn | None = None
    offset_fn: ClosedFn | None = None  # assembled = offset + scale * series
    scale_fn: ClosedFn | None = None

    @property
    def verifiable(self) -> bool:
        return self.term_fn is not None and self.closed_fn is not None

    @property
    def is_family(self) -> bool:
        return self.param_name is not None


@dataclass(frozen=True)
class IdentitySummary:
    id: str
    paper_eq: str
    status: str
    params: str
    description: str


# --- shared constants (computed once, lazily) -------------------------------


@lru_cache(maxsize=None)
def _const_catalan() -> float:
    return catalan().value


@lru_cache(maxsize=None)
def _const_zeta3() -> float:
    return riemann_zeta(3.0).value


@lru_cache(maxsize=None)
def _const_beta4() -> float:
    return dirichlet_beta(4.0).value


@lru_cache(maxsize=None)
def _const_gamma() -> float:
    return euler_gamma().value


def _pi_poly(coeffs: dict[int, Fraction]) -> float:
    """Evaluate sum of coeff * pi**power with a fixed (ascending) term order.

    Entries whose closed forms must agree exactly as floats share this one
    evaluation path, so equal coefficient maps give bit-equal results.
    """
    acc = 0.0
    for power in sorted(coeffs):
        acc += float(coeffs[power]) * math.pi ** power
    return acc


# --- tail-bound constructions ------------------------------------------------


def _poly_geom_tail(p: Callable[[int], float], ratio: float, major: float) -> Callable[[int], float]:
    """Bound for tails of major-bounded-coefficient sums c(n) p(n) ratio^n.

    Valid when c(n) <= major on the tail and p has nonincreasing successive
    ratios (true for every polynomial factor used here): then
    p(n) <= p(N+1) rho^(n-N-1) with rho = max(1, p(N+2)/p(N+1)).
    """

    def tail(N: int) -> float:
        p_next = p(N + 1)
        rho = max(1.0, p(N + 2) / p_next)
        if rho * ratio >= 1.0:
            raise ValueError("tail bound needs rho * ratio < 1")
        return major * p_next * ratio ** (N + 1) / (1.0 - rho * ratio)

    return tail


def _ratio_capped_tail(
    term_abs: Callable[[int], float],
    ratio_cap: Callable[[int], float],
    q_star: float,
) -> Callable[[int], float]:
    """Bound for binomial-weighted tails: explicit terms until the term-ratio
    cap falls under q_star, then a geometric closure.

    ratio_cap(n) must bound |t(j+1)/t(j)| for every j >= n with positive
    terms, and be nonincreasing in n; both hold for the binomial families.
    """

    def tail(N: int) -> float:
        total = 0.0
        n = N + 1
        while True:
            t = term_abs(n)
            if t == 0.0:
                n += 1
                continue
            cap = ratio_cap(n)
            if cap <= q_star:
                return total + t / (1.0 - cap)
            total += t
            n += 1

    return tail


# --- registry construction ---------------------------------------------------


def _zeta_ratio_term(p: Callable[[int], float], ratio: float, minus_one: bool = False) -> TermFn:
    coeff = zeta_even_m1_float if minus_one else zeta_even_float

    def term_fn(_param: int | None, n: int) -> float:
        return coeff(n) * p(n) * ratio ** n

    return term_fn


def _binom_frac(c: int, denom: int) -> float:
    # exact rational -> correctly rounded float; immune to int->float overflow
    return float(Fraction(c, denom))


def _f(x: float) -> ClosedFn:
    return lambda _param: x


def _scalar_entry(
    id: str,
    paper_eq: str,
    description: str,
    *,
    p: Callable[[int], float],
    ratio: float,
    closed_fn: ClosedFn,
    start_index: int = 1,
    minus_one: bool = False,
    status: str = "as-printed",
    printed_closed_fn: ClosedFn | None = None,
    offset_fn: ClosedFn | None = None,
    scale_fn: ClosedFn | None = None,
    targets: tuple[str, ...] = (),
) -> IdentityDescriptor:
    if minus_one:
        tail = _poly_geom_tail(p, ratio / 4.0, 2.0)
    else:
        tail = _poly_geom_tail(p, ratio, ZETA2)
    return IdentityDescriptor(
        id=id,
        paper_eq=paper_eq,
        status=status,
        description=description,
        start_index=start_index,
        targets=targets,
        term_fn=_zeta_ratio_term(p, ratio, minus_one),
        closed_fn=closed_fn,
        printed_closed_fn=printed_closed_fn,
        tail_fn=lambda _param, N: tail(N),
        offset_fn=offset_fn,
        scale_fn=scale_fn,
    )


def _binom_family(
    id: str,
    paper_eq: str,
    description: str,
    *,
    param_name: str,
    param_min: int,
    param_domain: str,
    top_offset: int,  # binomial top index is 2n + top_offset
    choose: Callable[[int], int],  # lower index as function of the param
    inv_pow: int,  # 4 or 16
    weighted: bool,  # include the (1 - 4^-n) factor
    closed_fn: ClosedFn,
    status: str = "as-printed",
    printed_closed_fn: ClosedFn | None = None,
) -> IdentityDescriptor:
    ratio = 1.0 / inv_pow
    q_star = 0.5 if inv_pow == 4 else 0.2

    def term_fn(param: int | None, n: int) -> float:
        m = choose(param)
        c = math.comb(2 * n + top_offset, m)
        if c == 0:
            return 0.0
        num, den = c, n * inv_pow ** n
        if weighted:
            num, den = c * (4 ** n - 1), den * 4 ** n
        return zeta_even_float(n) * _binom_frac(num, den)

    def tail_fn(param: int | None, N: int) -> float:
        m = choose(param)

        def term_abs(n: int) -> float:
            return abs(term_fn(param, n))

        def ratio_cap(n: int) -> float:
            top = 2 * n + top_offset
            cap = ratio * (top + 2) * (top + 1) / ((top + 2 - m) * (top + 1 - m))
            if weighted:
                cap *= (1.0 - 4.0 ** (-(n + 1))) / (1.0 - 4.0 ** (-n))
            return cap

        return _ratio_capped_tail(term_abs, ratio_cap, q_star)(N)

    return IdentityDescriptor(
        id=id,
        paper_eq=paper_eq,
        status=status,
        description=description,
        start_index=1,
        param_name=param_name,
        param_min=param_min,
        param_domain=param_domain,
        term_fn=term_fn,
        closed_fn=closed_fn,
        printed_closed_fn=printed_closed_fn,
        tail_fn=tail_fn,
    )


def _zeta_even_coeff(m: int) -> Fraction:
    # exact rational c with zeta(m) = c * pi^m, m even
    return zeta_even_exact(m // 2).coeff


def _thm21_closed(m: int | None) -> float:
    assert m is not None
    if m % 2 == 1:
        return _pi_poly({0: Fraction(1, m)})
    c = _zeta_even_coeff(m)
    return _pi_poly({0: -Fraction(1, m), m: 2 * c * (1 - Fraction(1, 2 ** m)) / m})


def _thm29_closed(m: int | None) -> float:
    assert m is not None
    if m % 2 == 0:
        c = _zeta_even_coeff(m)
        return _pi_poly({0: -Fraction(1, m), m: c * (1 - Fraction(1, 2 ** m)) / m})
    j = (m - 1) // 2
    if j == 0:
        return _pi_poly({0: Fraction(1), 1: -Fraction(1, 4)})
    w = zeta_e_exact(j).coeff * (1 - Fraction(1, 4 ** j))
    return _pi_poly({0: Fraction(1, m), 2 * j + 1: -w / m})


def _sum28_closed(k: int | None, corrected: bool) -> float:
    assert k is not None
    c = _zeta_even_coeff(2 * k)
    tail = Fraction(1, 2 * k * (2 * k - 1))
    return _pi_poly({0: tail if corrected else -tail, 2 * k: c * (1 - Fraction(1, 4 ** k)) / k})


def _sum37_closed(k: int | None) -> float:
    assert k is not None
    c = _zeta_even_coeff(2 * k)
    return _pi_poly({2 * k: c * (1 - Fraction(1, 4 ** k)) / (2 * k)})


def _sum38_closed(k: int | None) -> float:
    assert k is not None
    if k == 0:
        return _pi_poly({1: Fraction(1, 4)})
    w = zeta_e_exact(k).coeff * (1 - Fraction(1, 4 ** k))
    return _pi_poly({2 * k + 1: w / (2 * k + 1)})


def _apery_term(_param: int | None, n: int) -> float:
    denom = n ** 3 * math.comb(2 * n, n)
    value = _binom_frac(1, denom)
    return value if n % 2 == 1 else -value


def _apery_tail(_param: int | None, N: int) -> float:
    # alternating with strictly decreasing magnitudes: first omitted term
    return abs(_apery_term(None, N + 1))


def _representation(id: str, paper_eq: str, description: str) -> IdentityDescriptor:
    return IdentityDescriptor(
        id=id,
        paper_eq=paper_eq,
        status="representation",
        description=description,
        param_name=None,
        param_domain="theta in (-2pi, 2pi)",
    )


def _build_registry() -> dict[str, IdentityDescriptor]:
    entries: list[IdentityDescriptor] = []

    entries.append(_representation(
        "CL2_ACCEL_8", "Eq. (8)",
        "Cl2(theta)/theta = 1 - log|theta| + sum_{n>=1} zeta(2n) theta^(2n) / ((2pi)^(2n) n (2n+1))",
    ))

    entries.append(_scalar_entry(
        "SUM_9", "Eq. (9)",
        "sum_{n>=1} zeta(2n)/(n (2n+1) 16^n) = 2G/pi - 1 + log(pi/2)",
        p=lambda n: 1.0 / (n * (2 * n + 1)), ratio=1 / 16,
        closed_fn=lambda _p: 2.0 * _const_catalan() / math.pi - 1.0 + math.log(math.pi / 2.0),
        targets=("catalan-relations",),
    ))

    entries.append(_representation(
        "CL2_PEELED_10", "Eq. (10)",
        "Cl2(theta)/theta = 3 - log(|theta|(1 - theta^2/4pi^2)) - (2pi/theta) log((2pi+theta)/(2pi-theta))"
        " + sum (zeta(2n)-1)/(n(2n+1)) (theta/2pi)^(2n)",
    ))
    entries.append(_representation(
        "CL2_WZL_11", "Eq. (11)",
        "Cl2(theta) = theta - theta log(2 sin(theta/2)) - sum_{n>=1} 2 zeta(2n) theta^(2n+1) / ((2n+1)(2pi)^(2n))",
    ))

    # zeta(3) representations: assembled = offset + scale * series
    entries.append(_scalar_entry(
        "ZETA3_12", "Eq. (12)",
        "zeta(3) = (4pi^2/35)(1/2 + 2G/pi - sum_{n>=1} zeta(2n)/((n+1)(2n+1) 16^n))",
        p=lambda n: 1.0 / ((n + 1) * (2 * n + 1)), ratio=1 / 16,
        closed_fn=lambda _p: _const_zeta3(),
        offset_fn=lambda _p: (4.0 * math.pi ** 2 / 35.0) * (0.5 + 2.0 * _const_catalan() / math.pi),
        scale_fn=_f(-4.0 * math.pi ** 2 / 35.0),
        targets=("zeta3",),
    ))
    entries.append(_scalar_entry(
        "ZETA3_13", "Eq. (13)",
        "zeta(3) = (2pi^2/9)(log 2 + 2 sum_{n>=0} zeta(2n)/((2n+3) 4^n)), zeta(0) = -1/2",
        p=lambda n: 1.0 / (2 * n + 3), ratio=1 / 4, start_index=0,
        closed_fn=lambda _p: _const_zeta3(),
        offset_fn=lambda _p: (2.0 * math.pi ** 2 / 9.0) * math.log(2.0),
        scale_fn=_f(4.0 * math.pi ** 2 / 9.0),
        targets=("zeta3",),
    ))
    entries.append(IdentityDescriptor(
        id="ZETA3_APERY_14", paper_eq="Eq. (14)", status="as-printed",
        description="zeta(3) = (5/2) sum_{n>=1} (-1)^(n-1) / (n^3 C(2n, n))",
        start_index=1, targets=("zeta3",),
        term_fn=_apery_term,
        closed_fn=lambda _p: _const_zeta3(),
        tail_fn=_apery_tail,
        offset_fn=None,
        scale_fn=_f(2.5),
    ))
    entries.append(_scalar_entry(
        "ZETA3_CK_15", "Eq. (15)",
        "zeta(3) = -(pi^2/3) sum_{n>=0} (2n+5) zeta(2n)/((2n+1)(2n+2)(2n+3) 4^n), zeta(0) = -1/2",
        p=lambda n: (2 * n + 5.0) / ((2 * n + 1) * (2 * n + 2) * (2 * n + 3)), ratio=1 / 4,
        start_index=0,
        closed_fn=lambda _p: _const_zeta3(),
        scale_fn=_f(-math.pi ** 2 / 3.0),
        targets=("zeta3",),
    ))
    entries.append(_scalar_entry(
        "ZETA3_EWELL_16", "Eq. (16)",
        "zeta(3) = -(4pi^2/7) sum_{n>=0} zeta(2n)/((2n+1)(2n+2) 4^n), zeta(0) = -1/2",
        p=lambda n: 1.0 / ((2 * n + 1) * (2 * n + 2)), ratio=1 / 4, start_index=0,
        closed_fn=lambda _p: _const_zeta3(),
        scale_fn=_f(-4.0 * math.pi ** 2 / 7.0),
        targets=("zeta3",),
    ))
    entries.append(_scalar_entry(
        "ZETA3_17", "Eq. (17)",
        "zeta(3) = (4pi^2/35)(3/2 - log(pi/2) + sum_{n>=1} zeta(2n)/(n(n+1)(2n+1) 16^n))",
        p=lambda n: 1.0 / (n * (n + 1) * (2 * n + 1)), ratio=1 / 16,
        closed_fn=lambda _p: _const_zeta3(),
        offset_fn=lambda _p: (4.0 * math.pi ** 2 / 35.0) * (1.5 - math.log(math.pi / 2.0)),
        scale_fn=_f(4.0 * math.pi ** 2 / 35.0),
        targets=("zeta3",),
    ))
    entries.append(_scalar_entry(
        "ZETA3_18", "Eq. (18)",
        "zeta(3) = -(64/3pi) beta(4) + (8pi^2/9)(4/3 - log(pi/2) + 3 sum_{n>=1} zeta(2n)/(n(2n+1)(2n+3) 16^n))",
        p=lambda n: 1.0 / (n * (2 * n + 1) * (2 * n + 3)), ratio=1 / 16,
        closed_fn=lambda _p: _const_zeta3(),
        offset_fn=lambda _p: (
            -64.0 / (3.0 * math.pi) * _const_beta4()
            + (8.0 * math.pi ** 2 / 9.0) * (4.0 / 3.0 - math.log(math.pi / 2.0))
        ),
        scale_fn=_f(8.0 * math.pi ** 2 / 3.0),
        targets=("zeta3",),
    ))
    entries.append(_scalar_entry(
        "ZETA3_19", "Eq. (19)",
        "zeta(3) = -(64/3pi) beta(4) + (16pi^2/27)(1/2 + 3G/pi - 3 sum_{n>=1} zeta(2n)/((2n+1)(2n+3) 16^n))",
        p=lambda n: 1.0 / ((2 * n + 1) * (2 * n + 3)), ratio=1 / 16,
        closed_fn=lambda _p: _const_zeta3(),
        offset_fn=lambda _p: (
            -64.0 / (3.0 * math.pi) * _const_beta4()
            + (16.0 * math.pi ** 2 / 27.0) * (0.5 + 3.0 * _const_catalan() / math.pi)
        ),
        scale_fn=_f(-16.0 * math.pi ** 2 / 9.0),
        targets=("zeta3",),
    ))
    entries.append(_scalar_entry(
        "ZETA3_20", "Eq. (20)",
        "zeta(3) = (2pi^2/35)(9 + 138 log 2 - 18 log 3 - 50 log 5 - 2 log pi"
        " + 2 sum_{n>=1} (zeta(2n)-1)/(n(2n+1)(n+1) 16^n))",
        p=lambda n: 1.0 / (n * (2 * n + 1) * (n + 1)), ratio=1 / 16, minus_one=True,
        closed_fn=lambda _p: _const_zeta3(),
        offset_fn=lambda _p: (2.0 * math.pi ** 2 / 35.0) * (
            9.0 + 138.0 * math.log(2.0) - 18.0 * math.log(3.0)
            - 50.0 * math.log(5.0) - 2.0 * math.log(math.pi)
        ),
        scale_fn=_f(4.0 * math.pi ** 2 / 35.0),
        targets=("zeta3",),
    ))

    # rational zeta series over zeta(n, 2) = zeta(n) - 1 (reindexed to n >= 1)
    entries.append(IdentityDescriptor(
        id="RZS_ONE", paper_eq="Sec. 2.2", status="as-printed",
        description="sum_{m>=2} (zeta(m) - 1) = 1",
        start_index=1,
        term_fn=lambda _p, n: zeta_minus_one(float(n + 1)).value,
        closed_fn=_f(1.0),
        tail_fn=lambda _p, N: 2.0 ** (-N),
    ))
    entries.append(IdentityDescriptor(
        id="RZS_GAMMA", paper_eq="Sec. 2.2", status="as-printed",
        description="sum_{m>=2} (zeta(m) - 1)/m = 1 - gamma",
        start_index=1,
        term_fn=lambda _p, n: zeta_minus_one(float(n + 1)).value / (n + 1),
        closed_fn=lambda _p: 1.0 - _const_gamma(),
        tail_fn=lambda _p, N: 2.0 ** (-N) / (N + 3),
    ))
    entries.append(IdentityDescriptor(
        id="RZS_LOG2", paper_eq="Sec. 2.2", status="as-printed",
        description="sum_{n>=1} (zeta(2n) - 1)/n = log 2",
        start_index=1,
        term_fn=lambda _p, n: zeta_even_m1_float(n) / n,
        closed_fn=lambda _p: math.log(2.0),
        tail_fn=lambda _p, N: (2.0 / 3.0) * 4.0 ** (-N) / (N + 1),
    ))

    entries.append(_binom_family(
        "THM_21", "Eq. (21)",
        "sum_{n>=1} zeta(2n) C(2n, m)/(n 4^n) = 1/m (m odd), (2 zeta(m)(1 - 2^-m) - 1)/m (m even)",
        param_name="m", param_min=1, param_domain="integer m >= 1",
        top_offset=0, choose=lambda m: m, inv_pow=4, weighted=False,
        closed_fn=_thm21_closed,
    ))

    entries.append(_scalar_entry(
        "SUM_22", "Eq. (22)",
        "sum_{n>=1} zeta(2n)/(n (2n+1) 4^n) = log pi - 1",
        p=lambda n: 1.0 / (n * (2 * n + 1)), ratio=1 / 4,
        closed_fn=lambda _p: math.log(math.pi) - 1.0,
    ))
    entries.append(_scalar_entry(
        "SUM_23", "Eq. (23)",
        "sum_{n>=1} zeta(2n)/4^n = 1/2",
        p=lambda n: 1.0, ratio=1 / 4,
        closed_fn=lambda _p: _pi_poly({0: Fraction(1, 2)}),
    ))
    entries.append(_scalar_entry(
        "SUM_24", "Eq. (24)",
        "sum_{n>=1} zeta(2n)(2n-1)(2n-2)/4^n = 1",
        p=lambda n: (2.0 * n - 1) * (2.0 * n - 2), ratio=1 / 4,
        closed_fn=lambda _p: _pi_poly({0: Fraction(1)}),
    ))
    entries.append(_scalar_entry(
        "SUM_25", "Eq. (25)",
        "sum_{n>=1} zeta(2n)(2n-1)/4^n = pi^2/8 - 1/2",
        p=lambda n: 2.0 * n - 1, ratio=1 / 4,
        closed_fn=lambda _p: _pi_poly({0: -Fraction(1, 2), 2: Fraction(1, 8)}),
    ))
    entries.append(_scalar_entry(
        "SUM_26", "Eq. (26)",
        "sum_{n>=1} zeta(2n) n/4^n = pi^2/16",
        p=lambda n: float(n), ratio=1 / 4,
        closed_fn=lambda _p: _pi_poly({2: Fraction(1, 16)}),
    ))
    entries.append(_scalar_entry(
        "SUM_27", "Eq. (27)",
        "sum_{n>=1} zeta(2n) n^2/4^n = 3pi^2/32",
        p=lambda n: float(n) ** 2, ratio=1 / 4,
        closed_fn=lambda _p: _pi_poly({2: Fraction(3, 32)}),
    ))

    entries.append(_binom_family(
        "SUM_28", "Eq. (28)",
        "sum_{n>=1} zeta(2n) C(2n+1, 2k)/(n 4^n) = zeta(2k)(1 - 4^-k)/k + 1/(2k(2k-1))"
        " (published with a minus sign on the last term)",
        param_name="k", param_min=1, param_domain="integer k >= 1",
        top_offset=1, choose=lambda k: 2 * k, inv_pow=4, weighted=False,
        closed_fn=lambda k: _sum28_closed(k, corrected=True),
        status="corrected",
        printed_closed_fn=lambda k: _sum28_closed(k, corrected=False),
    ))

    entries.append(_binom_family(
        "THM_29", "Eq. (29)",
        "sum_{n>=1} zeta(2n) C(2n, m)/(n 16^n) = (1 - zeta_E(m-1)(1 - 2^(1-m)))/m (m odd),"
        " (zeta(m)(1 - 2^-m) - 1)/m (m even)",
        param_name="m", param_min=1, param_domain="integer m >= 1",
        top_offset=0, choose=lambda m: m, inv_pow=16, weighted=False,
        closed_fn=_thm29_closed,
    ))

    entries.append(_scalar_entry(
        "SUM_30", "Eq. (30)",
        "sum_{n>=1} zeta(2n)/(n 16^n) = log(pi/(2 sqrt 2))",
        p=lambda n: 1.0 / n, ratio=1 / 16,
        closed_fn=lambda _p: math.log(math.pi / (2.0 * math.sqrt(2.0))),
    ))
    entries.append(_scalar_entry(
        "SUM_31", "Eq. (31)",
        "sum_{n>=1} zeta(2n)/16^n = (4 - pi)/8",
        p=lambda n: 1.0, ratio=1 / 16,
        closed_fn=lambda _p: _pi_poly({0: Fraction(1, 2), 1: -Fraction(1, 8)}),
    ))
    entries.append(_scalar_entry(
        "SUM_32", "Eq. (32)",
        "sum_{n>=1} zeta(2n)/(n 4^n) = log(pi/2)",
        p=lambda n: 1.0 / n, ratio=1 / 4,
        closed_fn=lambda _p: math.log(math.pi / 2.0),
    ))
    entries.append(_scalar_entry(
        "SUM_33", "Eq. (33)",
        "sum_{n>=1} zeta(2n)(2n-1)/16^n = pi^2/16 - 1/2",
        p=lambda n: 2.0 * n - 1, ratio=1 / 16,
        closed_fn=lambda _p: _pi_poly({0: -Fraction(1, 2), 2: Fraction(1, 16)}),
    ))
    entries.append(_scalar_entry(
        "SUM_34", "Eq. (34)",
        "sum_{n>=1} zeta(2n)(2n-1)(2n-2)/16^n = 1 - pi^3/32 (published as 1 - pi^3/96)",
        p=lambda n: (2.0 * n - 1) * (2.0 * n - 2), ratio=1 / 16,
        closed_fn=lambda _p: _pi_poly({0: Fraction(1), 3: -Fraction(1, 32)}),
        status="corrected",
        printed_closed_fn=lambda _p: _pi_poly({0: Fraction(1), 3: -Fraction(1, 96)}),
    ))
    entries.append(_scalar_entry(
        "SUM_35", "Eq. (35)",
        "sum_{n>=1} zeta(2n) n/16^n = (pi/16)(pi/2 - 1)",
        p=lambda n: float(n), ratio=1 / 16,
        closed_fn=lambda _p: _pi_poly({1: -Fraction(1, 16), 2: Fraction(1, 32)}),
    ))
    entries.append(_scalar_entry(
        "SUM_36", "Eq. (36)",
        "sum_{n>=1} zeta(2n) n^2/16^n = (pi/32)(3pi/2 - pi^2/4 - 1)",
        p=lambda n: float(n) ** 2, ratio=1 / 16,
        closed_fn=lambda _p: _pi_poly({1: -Fraction(1, 32), 2: Fraction(3, 64), 3: -Fraction(1, 128)}),
    ))

    entries.append(_binom_family(
        "SUM_37", "Eq. (37)",
        "sum_{n>=1} zeta(2n)(1 - 4^-n) C(2n, 2k)/(n 4^n) = zeta(2k)(1 - 4^-k)/(2k)",
        param_name="k", param_min=1, param_domain="integer k >= 1",
        top_offset=0, choose=lambda k: 2 * k, inv_pow=4, weighted=True,
        closed_fn=_sum37_closed,
    ))
    entries.append(_binom_family(
        "SUM_38", "Eq. (38)",
        "sum_{n>=1} zeta(2n)(1 - 4^-n) C(2n, 2k+1)/(n 4^n) = zeta_E(2k)(1 - 4^-k)/(2k+1),"
        " pi/4 weight at k = 0",
        param_name="k", param_min=0, param_domain="integer k >= 0",
        top_offset=0, choose=lambda k: 2 * k + 1, inv_pow=4, weighted=True,
        closed_fn=_sum38_closed,
    ))

    return {e.id: e for e in entries}


_REGISTRY: dict[str, IdentityDescriptor] = _build_registry()


def registry() -> dict[str, IdentityDescriptor]:
    """The full identity registry (immutable after import), in citation order."""
    return _REGISTRY


def get(id: str) -> IdentityDescriptor:
    try:
        return _REGISTRY[id]
    except KeyError:
        raise KeyError(f"unknown identity id {id!r}") from None


def list_identities() -> list[IdentitySummary]:
    """Summaries of every registry entry, in deterministic citation order."""
    out = []
    for e in _REGISTRY.values():
        params = e.param_domain if (e.is_family or e.status == "representation") else ""
        out.append(IdentitySummary(e.id, e.paper_eq, e.status, params, e.description))
    return out


_PARAM_CAP = 256  # keeps binomial coefficients comfortably inside float range

# Published tail bounds carry this absolute pad so they also cover the
# last-place rounding of the compensated partial sums being compared; the
# worst observed fold noise is ~4e-16 for sums of magnitude ~2.
TAIL_FLOOR = 1e-15


def _resolve(key: CatalogKey) -> tuple[IdentityDescriptor, int | None]:
    entry = get(key.id)
    if not entry.verifiable:
        raise ValueError(f"{key.id} is a function representation, not a summable identity")
    if entry.is_family:
        if key.param is None:
            raise ValueError(f"{key.id} needs parameter {entry.param_name}")
        if not (entry.param_min <= key.param <= _PARAM_CAP):
            raise ValueError(
                f"{key.id} parameter {entry.param_name} must be in [{entry.param_min}, {_PARAM_CAP}]"
            )
        return entry, key.param
    if key.param is not None:
        raise ValueError(f"{key.id} takes no parameter")
    return entry, None


def term(key: CatalogKey, n: int) -> float:
    """The n-th summand of the identity (bare series, no offset/scale)."""
    entry, param = _resolve(key)
    if n < entry.start_index:
        raise ValueError(f"{key.id} starts at n = {entry.start_index}")
    return entry.term_fn(param, n)


def closed_form(key: CatalogKey) -> float:
    """The identity's right-hand side (the corrected value when status = corrected)."""
    entry, param = _resolve(key)
    return entry.closed_fn(param)


def printed_closed_form(key: CatalogKey) -> float:
    """The published right-hand side of a corrected entry."""
    entry, param = _resolve(key)
    if entry.printed_closed_fn is None:
        raise ValueError(f"{key.id} has no separate published variant")
    return entry.printed_closed_fn(param)


def tail_bound(key: CatalogKey, N: int) -> float:
    """Rigorous upper bound on |sum_{n>N} term(n)| for the bare series.

    Includes the TAIL_FLOOR pad, so the bound stays valid when the partial
    sums it brackets are themselves compared in 64-bit arithmetic.
    """
    entry, param = _resolve(key)
    if N < entry.start_index:
        raise ValueError(f"N must be >= start index {entry.start_index}")
    return entry.tail_fn(param, N) + TAIL_FLOOR


def partial_sum(key: CatalogKey, N: int) -> EvalResult:
    """Compensated bare-series sum of terms start_index..N with its tail bound."""
    entry, param = _resolve(key)
    if N < entry.start_index:
        raise ValueError(f"N must be >= start index {entry.start_index}")
    acc = CompensatedSum()
    for n in range(entry.start_index, N + 1):
        acc.add(entry.term_fn(param, n))
    return EvalResult(acc.value, N - entry.start_index + 1, entry.tail_fn(param, N) + TAIL_FLOOR)


def assembled_sum(key: CatalogKey, N: int) -> EvalResult:
    """offset + scale * partial_sum(N): the identity's left-hand side at depth N."""
    entry, param = _resolve(key)
    bare = partial_sum(key, N)
    offset = entry.offset_fn(param) if entry.offset_fn is not None else 0.0
    scale = entry.scale_fn(param) if entry.scale_fn is not None else 1.0
    return EvalResult(offset + scale * bare.value, bare.terms_used, abs(scale) * bare.error_bound)
