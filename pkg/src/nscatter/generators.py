"""Deterministic interval-representation fixtures and seeded random instances.

Random draws use SplitMix64, a fixed, well-known 64-bit generator, so a
(kind, n, seed, max_coord) spec produces bit-identical output on every run
and platform.  Each vertex consumes exactly two draws, taken modulo
(max_coord + 1) and sorted into (left, right), in vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .intervals import Interval, IntervalRepresentation

KINDS = ("random-intervals", "complete", "path", "star", "figure1")

#: Eight intervals whose intersection graph has scattering number 2; used as
#: the standard worked fixture throughout the tests and docs.
FIGURE1_INTERVALS: tuple[Interval, ...] = (
    (31, 35),
    (31, 45),
    (36, 40),
    (36, 45),
    (42, 49),
    (41, 45),
    (47, 55),
    (51, 55),
)


class SplitMix64:
    """SplitMix64 pseudo-random generator (Steele, Lea & Flood's splitmix64)."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound) by modulo reduction."""
        return self.next_u64() % bound


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate: kind, vertex count, seed, and endpoint bound."""

    kind: str
    n: int = 8
    seed: int = 0
    max_coord: int = 32

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown generator kind {self.kind!r}")
        if self.n < 1:
            raise InputError("n must be at least 1")
        if self.max_coord < 2:
            raise InputError("max_coord must be at least 2")


def _labels(count: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(count))


def generate(spec: GeneratorSpec) -> IntervalRepresentation:
    """Produce the interval representation described by ``spec``.

    random-intervals: per vertex, two SplitMix64 draws in [0, max_coord],
    sorted into (left, right).  complete: n copies of [0, max_coord].
    path: the unit-overlap chain [i, i+1].  star: one long interval [0, 2n]
    plus n disjoint unit intervals inside it (n + 1 vertices total).
    figure1: the fixed eight-interval fixture, ignoring n/seed/max_coord.
    """
    if spec.kind == "figure1":
        return IntervalRepresentation(FIGURE1_INTERVALS, _labels(8))
    if spec.kind == "random-intervals":
        rng = SplitMix64(spec.seed)
        intervals = []
        for _ in range(spec.n):
            a = rng.below(spec.max_coord + 1)
            b = rng.below(spec.max_coord + 1)
            intervals.append((min(a, b), max(a, b)))
        return IntervalRepresentation(tuple(intervals), _labels(spec.n))
    if spec.kind == "complete":
        return IntervalRepresentation(
            tuple((0, spec.max_coord) for _ in range(spec.n)), _labels(spec.n)
        )
    if spec.kind == "path":
        return IntervalRepresentation(
            tuple((i, i + 1) for i in range(spec.n)), _labels(spec.n)
        )
    # star: the hub first, then n pairwise-disjoint leaves
    intervals = [(0, 2 * spec.n)]
    intervals.extend((2 * i, 2 * i + 1) for i in range(spec.n))
    return IntervalRepresentation(tuple(intervals), _labels(spec.n + 1))
