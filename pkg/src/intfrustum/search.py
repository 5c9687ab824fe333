"""Bounded enumeration of integral frusta and its brute-force certificate.

Two independent enumerations are provided:

``enumerate_integral``
    Generates frusta from Pythagorean quadruples. Each coordinate of a
    canonical solution ``t^2 = u^2 + v^2 + w^2`` takes a turn as the height
    ``H``; the other two become the offsets ``x <= y``; every ``d <= d_max``
    with ``x | y*d`` yields a frustum, kept when ``3 | H*y*x``.

``brute_force_oracle``
    Scans the box of six-tuples directly and keeps those satisfying each
    defining condition, evaluated literally: key ratio, orientation, strict
    shrink, even offsets, the lateral-edge identity and an integer volume.
    It never consults the quadruple machinery.

The lateral-edge identity bounds the box: ``H < t`` and both ``a - c`` and
``b - d`` lie in ``[1, 2t)``. The scan is written in those offset
coordinates (``a = c + p``, ``b = d + q``), which is a relabelling of the
same box. The key ratio gives ``c = p*d/q < 2t*d``, which caps ``c``.

``d`` is unbounded for a fixed quadruple, hence ``d_max``.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from intfrustum._parallel import map_partitioned
from intfrustum.diophantine import enumerate_three_squares
from intfrustum.exactmath import INT64_MAX, ArithmeticOverflow, CapacityError, DomainError
from intfrustum.families import GeneralSeed, build_general
from intfrustum.frustum import Frustum, FrustumRecord

log = logging.getLogger(__name__)

WORK_LIMIT = 10**9

Dims = tuple[int, int, int, int, int, int]


@dataclass(frozen=True)
class SearchBounds:
    t_max: int
    d_max: Optional[int] = None

    def __post_init__(self):
        # t_max < 3 is allowed and simply yields nothing.
        if self.t_max < 1:
            raise DomainError(f"t_max must be positive, got {self.t_max}")
        if self.d_max is None:
            object.__setattr__(self, "d_max", self.t_max)
        elif self.d_max < 1:
            raise DomainError(f"d_max must be positive, got {self.d_max}")


def _sort_key(dims: Dims) -> tuple[int, ...]:
    a, b, c, d, H, t = dims
    return (t, a, b, c, d, H)


def _records(dims_list) -> list[FrustumRecord]:
    unique = sorted(set(dims_list), key=_sort_key)
    return [FrustumRecord.of(Frustum(*dims)) for dims in unique]


def generator_work(bounds: SearchBounds) -> int:
    """Upper estimate of loop iterations for :func:`enumerate_integral`."""
    T = bounds.t_max
    return T**3 // 6 + 3 * T * T * bounds.d_max


def _conditional_chunk(quads: list[tuple[int, int, int, int]], d_max: int, integral_only: bool) -> list[Dims]:
    out = []
    for u, v, w, t in quads:
        roles = {(u, (v, w)), (v, (u, w)), (w, (u, v))}
        for H, (x, y) in roles:
            if integral_only and (H * x * y) % 3:
                continue
            for d in range(1, d_max + 1):
                if (y * d) % x:
                    continue
                rec = build_general(GeneralSeed(x=x, y=y, H=H, t=t, d=d))
                out.append(rec.frustum.dims)
    return out


def enumerate_integral(bounds: SearchBounds, workers: int = 1, integral_only: bool = True) -> list[FrustumRecord]:
    """Integral frusta with ``t <= t_max`` and ``d <= d_max``, sorted by ``(t, a, b, c, d, H)``.

    With ``integral_only=False`` the ``3 | H*y*x`` filter is skipped and every
    geometrically valid frustum in range is returned.
    """
    work = generator_work(bounds)
    if work > WORK_LIMIT:
        raise CapacityError(f"t_max={bounds.t_max}, d_max={bounds.d_max} implies ~{work:.2e} steps (limit {WORK_LIMIT:.0e})")
    quads = [s.as_tuple() for s in enumerate_three_squares(bounds.t_max, workers)]
    dims = map_partitioned(_conditional_chunk, quads, workers, bounds.d_max, integral_only)
    return _records(dims)


def _key_equation_hits(ts: list[int]) -> list[tuple[int, int, int, int]]:
    hits = []
    for t in ts:
        offsets = np.arange(1, 2 * t, dtype=np.int64)
        P, Q = np.meshgrid(offsets, offsets, indexing="ij")
        PQ = P * P + Q * Q
        for H in range(1, t):
            mask = 4 * t * t == 4 * H * H + PQ
            for p, q in zip(P[mask].tolist(), Q[mask].tolist()):
                hits.append((t, H, p, q))
    return hits


def _oracle_chunk(hits: list[tuple[int, int, int, int]], d_max: int) -> list[Dims]:
    out = []
    for t, H, p, q in hits:
        for d in range(1, d_max + 1):
            c = np.arange(1, 2 * t * d + 1, dtype=np.int64)
            a = c + p
            b = d + q
            keep = (
                (a * d == b * c)
                & (a >= b)
                & (c >= d)
                & (a > c)
                & (b > d)
                & ((a - c) % 2 == 0)
                & ((b - d) % 2 == 0)
                & ((d * H * (a * a + a * c + c * c)) % (3 * c) == 0)
            )
            for ci in c[keep].tolist():
                out.append((ci + p, b, ci, d, H, t))
    return out


def _oracle_precheck(bounds: SearchBounds) -> None:
    T, Dm = bounds.t_max, bounds.d_max
    grid = sum((t - 1) * (2 * t - 1) ** 2 for t in range(1, T + 1))
    if grid > WORK_LIMIT:
        raise CapacityError(f"t_max={T}: key-equation grid of {grid:.2e} cells exceeds limit {WORK_LIMIT:.0e}")
    # largest intermediate: d*H*(a^2 + a*c + c^2) with c < 2T*Dm, a < c + 2T
    peak = Dm * T * 3 * (2 * T * Dm + 2 * T) ** 2
    if peak > INT64_MAX:
        raise ArithmeticOverflow("brute_force_oracle volume test", peak)


def brute_force_oracle(bounds: SearchBounds, workers: int = 1) -> list[FrustumRecord]:
    """Integral frusta found by literal filtering of the six-tuple box.

    Refuses (``CapacityError``) when the box exceeds :data:`WORK_LIMIT`
    candidates after the key-equation prefilter.
    """
    _oracle_precheck(bounds)
    T, Dm = bounds.t_max, bounds.d_max
    hits = map_partitioned(_key_equation_hits, range(1, T + 1), workers)
    hits.sort()
    candidates = sum(t for t, _, _, _ in hits) * Dm * (Dm + 1)
    if candidates > WORK_LIMIT:
        raise CapacityError(f"t_max={T}, d_max={Dm}: {candidates:.2e} candidates exceed limit {WORK_LIMIT:.0e}")
    log.debug("oracle: %d key-equation hits, %d candidates", len(hits), candidates)
    dims = map_partitioned(_oracle_chunk, hits, workers, Dm)
    return _records(dims)


@dataclass(frozen=True)
class CrossCheckReport:
    bounds: SearchBounds
    count_conditional: int
    count_oracle: int
    mismatches: list[Dims] = field(default_factory=list)
    only_conditional: list[Dims] = field(default_factory=list)
    only_oracle: list[Dims] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_check(
    bounds: SearchBounds,
    workers: int = 1,
    conditional: Optional[Callable[[SearchBounds, int], list[FrustumRecord]]] = None,
) -> CrossCheckReport:
    """Compare the generator against the oracle on identical bounds.

    ``conditional`` replaces the generator side, which lets tests inject a
    faulty generator and confirm the harness notices.
    """
    conditional = conditional or enumerate_integral
    _oracle_precheck(bounds)
    start = time.perf_counter()
    gen = {r.frustum.dims for r in conditional(bounds, workers)}
    ora = {r.frustum.dims for r in brute_force_oracle(bounds, workers)}
    only_gen = sorted(gen - ora, key=_sort_key)
    only_ora = sorted(ora - gen, key=_sort_key)
    return CrossCheckReport(
        bounds=bounds,
        count_conditional=len(gen),
        count_oracle=len(ora),
        mismatches=sorted(only_gen + only_ora, key=_sort_key),
        only_conditional=only_gen,
        only_oracle=only_ora,
        elapsed=time.perf_counter() - start,
    )
