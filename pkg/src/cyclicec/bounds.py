"""Closed-form bounds on cyclic edge-connectivity and the certify pipeline.

Conventions: ``d`` is the degree of a regular graph, ``g`` its girth,
``r = g // 2`` and ``lam`` the signed second largest adjacency eigenvalue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from . import cyccut
from .errors import (
    AcyclicInput,
    CECError,
    ConnectivityRequired,
    EvenGirthRequired,
    InvalidParameter,
    OddGirthRequired,
    RegularityRequired,
    TheoremPreconditionViolated,
)
from .graph import Graph, degree_profile, girth, is_connected
from .spectral import spectrum

GUARD_BAND = 1e-6
MARGINAL = "marginal"

Holds = Union[bool, str]


@dataclass(frozen=True)
class MooreResult:
    d: float
    g: int
    r: int
    value: float


def moore_bound(d: float, g: int) -> MooreResult:
    """Irregular Moore bound ``n0(d, g)`` for real average degree ``d >= 2``."""
    if d < 2 or g < 3:
        raise InvalidParameter(f"moore_bound needs d >= 2 and g >= 3, got d={d}, g={g}")
    r = g // 2
    geometric = sum((d - 1) ** i for i in range(r))
    value = 1 + d * geometric if g % 2 else 2 * geometric
    return MooreResult(d, g, r, value)


def prop22_lower(d: int, lam: float, g: int, k: int) -> float:
    """Spectral lower bound on the smallest edge cut leaving components of size >= k.

    Only even girth ``g = 2r`` is supported.
    """
    if g % 2:
        raise EvenGirthRequired(f"prop22_lower supports even girth only, got g={g}")
    r = g // 2
    if r < 2 or k < 0 or lam >= d:
        raise InvalidParameter(f"prop22_lower needs g >= 4, k >= 0, lam < d (g={g}, k={k}, lam={lam})")
    denom = (d - 1) ** r - 2
    if denom <= 0:
        raise InvalidParameter(f"(d-1)^r must exceed 2, got {(d - 1) ** r}")
    return k * (d - lam) * (1 - k / denom)


def quotient_lower(d: float, lam: float, n: int, size_x: int) -> float:
    """Lower bound ``(d - lam) |X| (n - |X|) / n`` on ``e(X, X-bar)``."""
    if not 0 < size_x < n or lam >= d:
        raise InvalidParameter(f"quotient_lower needs 0 < |X| < n and lam < d "
                               f"(|X|={size_x}, n={n}, lam={lam}, d={d})")
    return (d - lam) * size_x * (n - size_x) / n


@dataclass(frozen=True)
class EpsilonAnalysis:
    d: int
    g: int
    r: int
    a: float  # coefficient of eps^2
    b: float  # coefficient of eps
    c: float  # constant term
    epsilon_star: float
    f_at_zero: float
    f_at_dminus2: float

    def f(self, eps: float) -> float:
        return (self.a * eps + self.b) * eps + self.c


def epsilon_analysis(d: int, g: int) -> EpsilonAnalysis:
    """The quadratic ``f(eps)`` from the odd-girth case and its positive root.

    ``f(eps) = -C(r,2) eps^2 + ((d-2) C(r,2) - r^2) eps + (d-2) r^2 - g``.
    For ``g = 3`` the quadratic degenerates to ``d - 5 - eps`` and the root is
    exactly ``d - 5``.
    """
    if g % 2 == 0:
        raise OddGirthRequired(f"epsilon_analysis needs odd girth, got g={g}")
    if d < 5 or g < 3:
        raise InvalidParameter(f"epsilon_analysis needs d >= 5 and g >= 3, got d={d}, g={g}")
    r = g // 2
    cr2 = r * (r - 1) // 2
    a = -cr2
    b = (d - 2) * cr2 - r * r
    c = (d - 2) * r * r - g
    if g == 3:
        root = float(d - 5)
    else:
        # Cancellation-free form: q has the sign of b, roots are q/a and c/q.
        q = -0.5 * (b + math.copysign(math.sqrt(b * b - 4 * a * c), b))
        roots = (q / a, c / q)
        root = next(x for x in roots if 0 < x < d - 2)
    f0 = c
    fd = (a * (d - 2) + b) * (d - 2) + c
    return EpsilonAnalysis(d, g, r, a, b, c, root, f0, fd)


@dataclass
class SpectralVerdict:
    d: int
    g: int
    lam: float
    branch: str  # "girth3", "even" or "odd"
    lhs: float
    rhs: float
    holds: Holds
    lower_bound: int | None
    notes: list[str] = field(default_factory=list)


def _compare(lhs: float, rhs: float, guard: float) -> Holds:
    if guard > 0 and abs(lhs - rhs) <= guard:
        return MARGINAL
    return lhs <= rhs


def spectral_condition(d: int, g: int, lam: float, guard: float = 0.0) -> SpectralVerdict:
    """Evaluate the spectral sufficient condition for CEC >= (d-2)g.

    Girth 3 uses ``lam <= d - 6 + 12/d`` (lower bound ``3d - 6``).  Girth
    ``g >= 4`` uses ``2(d-2)g / (d - lam) <= n0(d - 2/(r-1), g)``.  With a
    positive ``guard`` any comparison closer than ``guard`` is reported as
    ``"marginal"`` instead of being decided.
    """
    if g < 3:
        raise InvalidParameter(f"girth must be >= 3, got {g}")
    if d < 5:
        raise TheoremPreconditionViolated(f"the spectral condition needs d >= 5, got d={d}")
    if lam >= d:
        raise InvalidParameter(f"lambda must be below d (lambda={lam}, d={d})")
    notes = []
    if g == 3:
        lhs, rhs = lam, d - 6 + 12 / d
        holds = _compare(lhs, rhs, guard)
        notes.append(f"girth 3: lambda={lhs:.12g} vs d-6+12/d={rhs:.12g}")
        return SpectralVerdict(d, g, lam, "girth3", lhs, rhs, holds,
                               3 * d - 6 if holds is True else None, notes)
    r = g // 2
    lhs = 2 * (d - 2) * g / (d - lam)
    rhs = moore_bound(d - 2 / (r - 1), g).value
    holds = _compare(lhs, rhs, guard)
    notes.append(f"2(d-2)g/(d-lambda)={lhs:.12g} vs n0(d-2/(r-1), g)={rhs:.12g}")
    if g == 4:
        # The 48-vertex counterexample quotes lambda <= d - (d-2)g/n0(d-2, 4),
        # looser than the theorem's condition by a factor of 2 in the subtrahend.
        loose = d - (d - 2) * g / moore_bound(d - 2, g).value
        notes.append(f"looser example threshold d-(d-2)g/n0(d-2,g)={loose:.12g}; "
                     f"lambda {'<=' if lam <= loose else '>'} it")
    branch = "odd" if g % 2 else "even"
    return SpectralVerdict(d, g, lam, branch, lhs, rhs, holds,
                           (d - 2) * g if holds is True else None, notes)


@dataclass
class CertifyReport:
    d: int
    g: int
    lambda2: float
    condition: SpectralVerdict | None
    lower_bound: int | None
    upper_bound: int | None
    witness_cycle: list[int] | None
    upper_witness: list[tuple[int, int]] | None
    verdict: str  # Equality, LowerOnly, UpperOnly, Inconclusive
    notes: list[str] = field(default_factory=list)

    @property
    def value(self) -> int | None:
        return self.lower_bound if self.verdict == "Equality" else None


def certify(G: Graph, extra_cuts: Iterable[Sequence[Sequence[int]]] = (),
            guard: float = GUARD_BAND) -> CertifyReport:
    """Combine the spectral lower bound and the girth-cycle upper bound.

    ``extra_cuts`` are additional candidate cyclic cuts (edge lists); each is
    validated and, if valid, may tighten the upper bound.  Equality is only
    reported when the spectral condition holds outright and some valid cut
    meets the lower bound.
    """
    if not is_connected(G):
        raise ConnectivityRequired("certify needs a connected graph")
    prof = degree_profile(G)
    if not prof.is_regular:
        raise RegularityRequired(
            f"certify needs a regular graph (degrees {prof.min_degree}..{prof.max_degree})")
    g = girth(G)
    if g is None:
        raise AcyclicInput("certify needs a graph with a cycle")
    d = prof.d
    lam2 = spectrum(G).lambda2
    notes = []

    try:
        cond = spectral_condition(d, g, lam2, guard=guard)
        notes.extend(cond.notes)
    except TheoremPreconditionViolated as exc:
        cond = None
        notes.append(f"spectral condition not applicable: {exc}")
    lower = cond.lower_bound if cond is not None else None
    if cond is not None and cond.holds == MARGINAL:
        notes.append("spectral condition is within the guard band; not decided")

    upper = None
    witness_cycle = None
    upper_witness = None
    try:
        found = cyccut.find_separating_girth_cycle(G)
        upper, witness_cycle = found.cut.size, found.cycle
        upper_witness = found.cut.crossing
        notes.append(f"separating girth cycle gives a cut of size {upper}")
    except CECError as exc:
        notes.append(f"no girth-cycle cut: {type(exc).__name__}: {exc}")
    for cut in extra_cuts:
        edges = [tuple(e) for e in cut]
        check = cyccut.validate_cyclic_cut(G, edges)
        if not check.valid:
            notes.append(f"supplied cut of size {len(edges)} is not a cyclic cut; ignored")
            continue
        notes.append(f"supplied cut of size {len(edges)} is a valid cyclic cut")
        if upper is None or len(edges) < upper:
            upper, upper_witness = len(edges), sorted(edges)

    if cond is None:
        verdict = "Inconclusive"
    elif lower is not None:
        verdict = "Equality" if upper == lower else "LowerOnly"
        if upper is not None and upper < lower:
            notes.append(f"upper bound {upper} below lower bound {lower}: inconsistent input")
            verdict = "Inconclusive"
    else:
        verdict = "UpperOnly" if upper is not None else "Inconclusive"
    return CertifyReport(d, g, lam2, cond, lower, upper, witness_cycle, upper_witness,
                         verdict, notes)
