"""Two-state belief arithmetic.

Bayes posteriors, binary entropy with the uniform belief normalized to 1,
the reference-prior transform used by the channel-cost machinery, Bayes-
plausible posterior splits, and grid-based lower convex envelopes
(bi-conjugates) of functions on [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

_P_TOL = 1e-12


def as_probability(b) -> float:
    """Accept a Belief or a bare probability."""
    p = float(b)
    if not (-_P_TOL <= p <= 1.0 + _P_TOL):
        raise ValueError(f"belief must lie in [0, 1], got {p}")
    return min(1.0, max(0.0, p))


@dataclass(frozen=True)
class Belief:
    """Probability assigned to the first state; the second gets 1 - p1."""

    p1: float

    def __post_init__(self):
        object.__setattr__(self, "p1", as_probability(self.p1))

    def __float__(self) -> float:
        return self.p1

    @property
    def interior(self) -> bool:
        return 0.0 < self.p1 < 1.0

    @property
    def degenerate(self) -> bool:
        return not self.interior


@dataclass(frozen=True)
class SignalingScheme:
    """Likelihood matrix pi(s | theta_k): rows are signals, the two columns
    are states; each column sums to 1."""

    likelihoods: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.likelihoods, dtype=float)
        if m.ndim != 2 or m.shape[1] != 2:
            raise ValueError(f"likelihoods must be (n_signals, 2), got {m.shape}")
        if np.any(m < -1e-12):
            raise ValueError("likelihoods must be nonnegative")
        sums = m.sum(axis=0)
        if np.any(np.abs(sums - 1.0) > 1e-9):
            raise ValueError(f"each state column must sum to 1, got {sums}")
        object.__setattr__(self, "likelihoods", np.clip(m, 0.0, None))

    @property
    def n_signals(self) -> int:
        return self.likelihoods.shape[0]

    @staticmethod
    def uninformative(n_signals: int = 1) -> "SignalingScheme":
        col = np.full((n_signals, 1), 1.0 / n_signals)
        return SignalingScheme(np.hstack([col, col]))

    @staticmethod
    def fully_revealing() -> "SignalingScheme":
        return SignalingScheme(np.array([[1.0, 0.0], [0.0, 1.0]]))


@dataclass(frozen=True)
class PosteriorSplit:
    """Finite distribution over posterior beliefs: ((posterior, weight), ...)."""

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        atoms = tuple((as_probability(p), float(w)) for p, w in self.atoms)
        if not atoms:
            raise ValueError("split needs at least one atom")
        if any(w <= 0.0 for _, w in atoms):
            raise ValueError("atom weights must be positive")
        total = sum(w for _, w in atoms)
        if abs(total - 1.0) > 1e-10:
            raise ValueError(f"atom weights must sum to 1, got {total}")
        object.__setattr__(self, "atoms", atoms)

    def mean(self) -> float:
        return sum(p * w for p, w in self.atoms)

    def is_plausible(self, prior, tol: float = 1e-9) -> bool:
        return abs(self.mean() - as_probability(prior)) <= tol

    def consolidated(self, tol: float = 1e-9) -> "PosteriorSplit":
        """Merge atoms whose posteriors coincide within tol; sort ascending."""
        merged: list[list[float]] = []
        for p, w in sorted(self.atoms):
            if merged and abs(p - merged[-1][0]) <= tol:
                pm, wm = merged[-1]
                merged[-1] = [(pm * wm + p * w) / (wm + w), wm + w]
            else:
                merged.append([p, w])
        return PosteriorSplit(tuple((p, w) for p, w in merged))


@dataclass(frozen=True)
class EnvelopeResult:
    """Lower convex envelope value at a query belief and its supporting split."""

    value: float
    split: PosteriorSplit
    grid_size: int


def bayes_posterior(prior, scheme: SignalingScheme, signal: int) -> Belief:
    """Posterior on the first state after observing the given signal index."""
    p = as_probability(prior)
    lk = scheme.likelihoods
    if not (0 <= signal < scheme.n_signals):
        raise ValueError(f"signal index {signal} out of range")
    marginal = lk[signal, 0] * p + lk[signal, 1] * (1.0 - p)
    if marginal <= 0.0:
        raise ValueError(f"signal {signal} has zero probability under this prior")
    return Belief(lk[signal, 0] * p / marginal)


def induced_split(prior, scheme: SignalingScheme) -> PosteriorSplit:
    """Distribution over posteriors induced by a scheme; one atom per signal
    with positive marginal, weights equal to signal marginals."""
    p = as_probability(prior)
    lk = scheme.likelihoods
    marginals = lk[:, 0] * p + lk[:, 1] * (1.0 - p)
    atoms = []
    for s in range(scheme.n_signals):
        if marginals[s] > 0.0:
            atoms.append((lk[s, 0] * p / marginals[s], float(marginals[s])))
    return PosteriorSplit(tuple(atoms))


def binary_entropy(b) -> float:
    """Base-2 entropy of a two-state belief; H(0.5) = 1, 0 log 0 = 0."""
    p = as_probability(b)
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


def reference_transform(posterior, prior) -> Belief:
    """Map a posterior generated under `prior` to the posterior the same
    signal realization would generate under a uniform reference prior.

    Undefined for degenerate priors."""
    q = as_probability(prior)
    if not (0.0 < q < 1.0):
        raise ValueError("reference transform needs an interior prior")
    p = as_probability(posterior)
    num = p / q
    den = num + (1.0 - p) / (1.0 - q)
    return Belief(num / den)


def tilde_entropy(posterior, prior) -> float:
    """Entropy of the reference-transformed posterior. Equals 1 at the prior
    itself and 0 at degenerate posteriors."""
    return binary_entropy(reference_transform(posterior, prior))


# ---------------------------------------------------------------------------
# lower convex envelope
# ---------------------------------------------------------------------------

_HULL_CROSS_TOL = 1e-12


def lower_hull_indices(xs: np.ndarray, ys: np.ndarray) -> list[int]:
    """Monotone-chain lower hull over points sorted by x.

    Collinear interior points are dropped (cross-product tolerance scaled by
    the value range) so exactly-affine stretches keep only their endpoints.
    """
    n = xs.shape[0]
    scale = max(1.0, float(np.max(np.abs(ys))))
    tol = _HULL_CROSS_TOL * scale
    hull: list[int] = []
    for i in range(n):
        while len(hull) >= 2:
            a, b = hull[-2], hull[-1]
            cross = (xs[b] - xs[a]) * (ys[i] - ys[a]) - (xs[i] - xs[a]) * (ys[b] - ys[a])
            if cross <= tol:
                hull.pop()
            else:
                break
        hull.append(i)
    return hull


def envelope_from_samples(xs, ys, query: float) -> tuple[float, tuple[tuple[float, float], ...]]:
    """Lower-hull value and supporting atoms at `query` for sampled points.

    Returns (value, ((x, weight), ...)) with one atom when the query sits on
    a hull vertex and two bracketing hull vertices otherwise.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if not np.all(np.isfinite(ys)):
        raise ValueError("sampled values must be finite")
    q = float(query)
    if q < xs[0] - _P_TOL or q > xs[-1] + _P_TOL:
        raise ValueError("query outside the sampled range")
    hull = lower_hull_indices(xs, ys)
    hx = xs[hull]
    hy = ys[hull]
    k = int(np.searchsorted(hx, q, side="right"))
    if k == 0:
        return float(hy[0]), ((float(hx[0]), 1.0),)
    if k >= len(hull):
        return float(hy[-1]), ((float(hx[-1]), 1.0),)
    xl, xr = float(hx[k - 1]), float(hx[k])
    yl, yr = float(hy[k - 1]), float(hy[k])
    wr = (q - xl) / (xr - xl)
    if wr <= 1e-12:
        return yl, ((xl, 1.0),)
    if wr >= 1.0 - 1e-12:
        return yr, ((xr, 1.0),)
    value = yl + wr * (yr - yl)
    return value, ((xl, 1.0 - wr), (xr, wr))


def lower_convex_envelope(
    f: Callable[[float], float] | Sequence[float],
    query,
    grid_size: int = 2001,
) -> EnvelopeResult:
    """Evaluate the lower convex envelope (bi-conjugate) of f over [0, 1].

    f is sampled on a uniform grid of `grid_size` points (or may already be a
    sequence of sampled values of that length). The supporting split contains
    the one or two hull vertices whose chord realizes the envelope at the
    query belief, with Bayes-plausible weights.
    """
    if grid_size < 3:
        raise ValueError("grid_size must be at least 3")
    xs = np.linspace(0.0, 1.0, grid_size)
    if callable(f):
        ys = np.array([float(f(float(x))) for x in xs])
    else:
        ys = np.asarray(f, dtype=float)
        if ys.shape != xs.shape:
            raise ValueError(f"sampled values must have length {grid_size}")
    q = as_probability(query)
    value, atoms = envelope_from_samples(xs, ys, q)
    return EnvelopeResult(value=value, split=PosteriorSplit(atoms), grid_size=grid_size)
