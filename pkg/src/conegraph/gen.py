"""Seeded point-set generators.

Randomness comes from numpy's ``Philox`` bit generator (Philox4x64-10, a
counter-based generator with published known-answer vectors), keyed by the
64-bit seed.  Same spec, same bits, on any platform.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .geometry import PointSet

MAX_REDRAWS = 16


class GenKind(str, Enum):
    UNIFORM = "uniform"
    GRID = "grid"
    GAUSSIAN_CLUSTERS = "gaussian_clusters"
    CIRCLE_WITH_CENTER = "circle_with_center"


@dataclass(frozen=True)
class GenSpec:
    kind: GenKind
    n: int
    seed: int = 0
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "kind", GenKind(self.kind))
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed))


def _dedupe(xy: np.ndarray, redraw) -> np.ndarray:
    for _ in range(MAX_REDRAWS):
        _, first = np.unique(xy, axis=0, return_index=True)
        dup = np.setdiff1d(np.arange(len(xy)), first)
        if len(dup) == 0:
            return xy
        xy[dup] = redraw(len(dup), dup)
    raise ValueError(f"could not draw {len(xy)} distinct points after {MAX_REDRAWS} redraws")


def _uniform(spec: GenSpec, rng) -> np.ndarray:
    xy = rng.random((spec.n, 2))
    return _dedupe(xy, lambda m, idx: rng.random((m, 2)))


def _grid(spec: GenSpec, rng) -> np.ndarray:
    jitter = float(spec.params.get("jitter", 0.25))
    m = math.ceil(math.sqrt(spec.n))
    i = np.arange(spec.n)
    base = np.column_stack(((i % m + 0.5) / m, (i // m + 0.5) / m))

    def shake(count, idx):
        return base[idx] + (rng.random((count, 2)) - 0.5) * (jitter / m)

    return _dedupe(shake(spec.n, i), shake)


def _clusters(spec: GenSpec, rng) -> np.ndarray:
    k = int(spec.params.get("clusters", 4))
    sigma = float(spec.params.get("sigma", 0.05))
    centres = rng.random((k, 2))
    label = rng.integers(0, k, size=spec.n)

    def draw(count, idx):
        return centres[label[idx]] + sigma * rng.standard_normal((count, 2))

    return _dedupe(draw(spec.n, np.arange(spec.n)), draw)


def _circle(spec: GenSpec, rng) -> np.ndarray:
    # phase keeps rim-to-rim directions off the cone boundaries
    radius = float(spec.params.get("radius", 1.0))
    phase = float(spec.params.get("phase", 1e-3))
    rim = spec.n - 1
    ang = phase + 2.0 * math.pi * np.arange(rim) / max(rim, 1)
    pts = np.zeros((spec.n, 2))
    pts[1:, 0] = radius * np.cos(ang)
    pts[1:, 1] = radius * np.sin(ang)
    return pts


_GENERATORS = {
    GenKind.UNIFORM: _uniform,
    GenKind.GRID: _grid,
    GenKind.GAUSSIAN_CLUSTERS: _clusters,
    GenKind.CIRCLE_WITH_CENTER: _circle,
}


def generate(spec: GenSpec | str, n: int | None = None, seed: int = 0, **params) -> PointSet:
    """Build a point set from a spec, or from ``(kind, n, seed, **params)``."""
    if not isinstance(spec, GenSpec):
        spec = GenSpec(GenKind(spec), int(n), int(seed), params)
    xy = _GENERATORS[spec.kind](spec, make_rng(spec.seed))
    return PointSet(xy)


def uniform(n: int, seed: int) -> PointSet:
    return generate(GenSpec(GenKind.UNIFORM, n, seed))


def circle_with_center(rim: int, radius: float = 1.0, phase: float = 1e-3) -> PointSet:
    """Center (id 0) plus ``rim`` equally spaced points on a circle."""
    return generate(GenSpec(GenKind.CIRCLE_WITH_CENTER, rim + 1, 0,
                            {"radius": radius, "phase": phase}))
