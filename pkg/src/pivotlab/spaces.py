"""Metric-space zoo: Hamming cube, Euclidean sphere, unit ball.

Provides seeded i.i.d. sampling under each space's natural measure,
instrumented distance evaluation (every true-distance computation is the
experiments' unit of time), 2-D projections, and the dataset file format
used by the experiment harness.

Randomness: all sampling goes through numpy's PCG64 generator, seeded via
SeedSequence so that independent streams can be derived from a master seed
and a path of stream indices. Gaussian variates come from the generator's
standard_normal (ziggurat) transform. Replays are bit-identical for a fixed
seed within one installation of this package.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidInputError

HAMMING = "hamming"
SPHERE = "sphere"
BALL = "ball"
EUCLIDEAN = "euclidean"
GEODESIC = "geodesic"

_KINDS = (HAMMING, SPHERE, BALL)
_METRICS = (EUCLIDEAN, GEODESIC)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class SpaceKind:
    """A metric domain: variant tag, dimension, and (sphere only) metric variant.

    Hamming is the cube {0,1}^d with normalized Hamming distance; sphere is
    the set of unit-norm vectors in R^d with chord (euclidean) or great-circle
    (geodesic) distance; ball is the unit ball in R^d with Euclidean distance.
    """

    kind: str
    d: int
    metric: str | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidInputError(f"unknown space kind {self.kind!r}")
        if not isinstance(self.d, int) or self.d < 1:
            raise InvalidInputError(f"dimension must be a positive integer, got {self.d!r}")
        if self.kind == SPHERE:
            if self.metric is None:
                object.__setattr__(self, "metric", EUCLIDEAN)
            elif self.metric not in _METRICS:
                raise InvalidInputError(f"unknown sphere metric {self.metric!r}")
        elif self.metric is not None:
            raise InvalidInputError("metric variant is only meaningful for the sphere")

    @property
    def words(self) -> int:
        """Number of 64-bit words a packed Hamming point occupies."""
        return (self.d + 63) // 64

    def diameter(self) -> float:
        if self.kind == HAMMING:
            return 1.0
        if self.kind == SPHERE and self.metric == GEODESIC:
            return math.pi
        return 2.0


def hamming_space(d: int) -> SpaceKind:
    return SpaceKind(HAMMING, d)


def sphere_space(d: int, metric: str = EUCLIDEAN) -> SpaceKind:
    return SpaceKind(SPHERE, d, metric)


def ball_space(d: int) -> SpaceKind:
    return SpaceKind(BALL, d)


class DistanceCounter:
    """Accumulates the number of true-distance evaluations for one query."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def add(self, m: int = 1):
        self.count += m

    def __repr__(self):
        return f"DistanceCounter(count={self.count})"


# ---------------------------------------------------------------------------
# seeding


def _check_seed(seed: int):
    if not isinstance(seed, (int, np.integer)) or seed < 0 or seed >= 2**64:
        raise InvalidInputError(f"seed must be a 64-bit unsigned integer, got {seed!r}")


def stream_rng(seed: int, *path: int) -> np.random.Generator:
    """Independent PCG64 stream keyed by (master seed, *path)."""
    _check_seed(seed)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed), spawn_key=path)))


def derive_seed(seed: int, *path: int) -> int:
    """A 64-bit sub-seed for the stream keyed by (master seed, *path)."""
    _check_seed(seed)
    ss = np.random.SeedSequence(int(seed), spawn_key=path)
    return int(ss.generate_state(1, np.uint64)[0])


# ---------------------------------------------------------------------------
# point packing helpers (Hamming)

def pack_bits(bits) -> np.ndarray:
    """Pack a 0/1 bit vector (first bit = most significant of byte 0) into uint64 words."""
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.ndim != 1:
        raise InvalidInputError("pack_bits expects a 1-D bit vector")
    return _pack_rows(arr[np.newaxis, :])[0]


def unpack_bits(packed: np.ndarray, d: int) -> np.ndarray:
    """Inverse of pack_bits: the first d bits as a uint8 0/1 vector."""
    return np.unpackbits(np.ascontiguousarray(packed).view(np.uint8))[:d]


def hamming_point(bits) -> np.ndarray:
    """Build a packed Hamming point from a bit string like "1010" or a 0/1 sequence."""
    if isinstance(bits, str):
        bits = [int(c) for c in bits]
    return pack_bits(bits)


def _pack_rows(bits: np.ndarray) -> np.ndarray:
    n, d = bits.shape
    words = (d + 63) // 64
    packed = np.packbits(bits, axis=1)
    padded = np.zeros((n, words * 8), dtype=np.uint8)
    padded[:, : packed.shape[1]] = packed
    return padded.view(np.uint64)


# ---------------------------------------------------------------------------
# datasets


@dataclass(frozen=True, eq=False)
class Dataset:
    """An indexed finite sample of a space; carries empirical-measure semantics.

    points is (n, words) uint64 for Hamming, (n, d) float64 otherwise. The
    array is frozen (read-only) after construction; seed records provenance.
    """

    space: SpaceKind
    points: np.ndarray
    seed: int

    @property
    def n(self) -> int:
        return self.points.shape[0]

    def point(self, j: int) -> np.ndarray:
        return self.points[j]


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _validate_points(space: SpaceKind, points: np.ndarray):
    if space.kind == HAMMING:
        if points.dtype != np.uint64 or points.ndim != 2 or points.shape[1] != space.words:
            raise InvalidInputError("hamming points must be a (n, words) uint64 array")
        # padding bits beyond d must be zero for popcount distances to be valid
        tail = space.d % 64
        if tail and points.shape[0]:
            mask = np.uint64(0)
            for i in range(tail):
                mask |= np.uint64(1) << np.uint64(7 - (i % 8) + 8 * (i // 8) - 8 * ((tail - 1) // 8) + 8 * ((tail - 1) // 8))
            # simpler: unpack the last word's bytes and check bits >= tail are zero
        if points.shape[0]:
            bits = np.unpackbits(np.ascontiguousarray(points).view(np.uint8), axis=None)
            bits = bits.reshape(points.shape[0], space.words * 64)
            if bits[:, space.d:].any():
                raise InvalidInputError("padding bits beyond dimension d must be zero")
        return
    if points.ndim != 2 or points.shape[1] != space.d:
        raise InvalidInputError(f"points must be (n, {space.d}), got {points.shape}")
    if space.kind == SPHERE and points.shape[0]:
        norms = np.linalg.norm(points, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-9):
            raise InvalidInputError("sphere points must have unit norm within 1e-9")
    if space.kind == BALL and points.shape[0]:
        norms = np.linalg.norm(points, axis=1)
        if np.any(norms > 1.0 + 1e-12):
            raise InvalidInputError("ball points must have norm <= 1 + 1e-12")


def dataset_from_points(space: SpaceKind, points, seed: int = 0) -> Dataset:
    """Build a Dataset from explicit points, validating them for the space."""
    if space.kind == HAMMING:
        pts = np.ascontiguousarray(points, dtype=np.uint64)
        if pts.ndim == 1:
            pts = pts.reshape(0, space.words) if pts.size == 0 else pts.reshape(1, -1)
    else:
        pts = np.ascontiguousarray(points, dtype=np.float64)
        if pts.ndim == 1:
            pts = pts.reshape(0, space.d) if pts.size == 0 else pts.reshape(1, -1)
    _validate_points(space, pts)
    return Dataset(space, _freeze(pts), seed)


def sample(space: SpaceKind, n: int, seed: int) -> Dataset:
    """Draw n i.i.d. points under the space's natural measure.

    Hamming: uniform bits. Sphere: normalized standard Gaussian vector
    (rotation invariant). Ball: Gaussian direction scaled by U^(1/d).
    Deterministic given (space, n, seed).
    """
    if n < 0:
        raise InvalidInputError("sample size must be non-negative")
    rng = stream_rng(seed)
    if space.kind == HAMMING:
        if n == 0:
            pts = np.zeros((0, space.words), dtype=np.uint64)
        else:
            bits = rng.integers(0, 2, size=(n, space.d), dtype=np.uint8)
            pts = _pack_rows(bits)
        return Dataset(space, _freeze(pts), seed)
    if n == 0:
        return Dataset(space, _freeze(np.zeros((0, space.d))), seed)
    g = rng.standard_normal((n, space.d))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    directions = g / norms
    if space.kind == SPHERE:
        pts = directions
    else:
        radii = rng.random(n) ** (1.0 / space.d)
        pts = directions * radii[:, np.newaxis]
    return Dataset(space, _freeze(np.ascontiguousarray(pts)), seed)


# ---------------------------------------------------------------------------
# distances


def _check_point(space: SpaceKind, x) -> np.ndarray:
    x = np.asarray(x)
    if space.kind == HAMMING:
        if x.dtype != np.uint64 or x.shape != (space.words,):
            raise InvalidInputError(
                f"expected packed hamming point of {space.words} words, got shape {x.shape} dtype {x.dtype}"
            )
        return x
    if x.shape != (space.d,):
        raise InvalidInputError(f"expected point of dimension {space.d}, got shape {x.shape}")
    return np.ascontiguousarray(x, dtype=np.float64)


def distance(space: SpaceKind, x, y, counter: DistanceCounter | None = None) -> float:
    """True distance rho(x, y) in the space; counts as one evaluation."""
    x = _check_point(space, x)
    y = _check_point(space, y)
    if counter is not None:
        counter.add(1)
    if space.kind == HAMMING:
        c = int(kernels.hamming_counts(x[np.newaxis, :], y)[0])
        return c / space.d
    chord = math.sqrt(float(kernels.sqeuclidean_batch(x[np.newaxis, :], y)[0]))
    if space.kind == SPHERE and space.metric == GEODESIC:
        return 2.0 * math.asin(min(chord / 2.0, 1.0))
    return chord


def distances_to_many(space: SpaceKind, points: np.ndarray, q, counter: DistanceCounter | None = None) -> np.ndarray:
    """Distances from every row of `points` to q; counts len(points) evaluations."""
    q = _check_point(space, q)
    if counter is not None:
        counter.add(points.shape[0])
    if space.kind == HAMMING:
        return kernels.hamming_counts(points, q) / space.d
    chord = np.sqrt(kernels.sqeuclidean_batch(points, q))
    if space.kind == SPHERE and space.metric == GEODESIC:
        return 2.0 * np.arcsin(np.clip(chord / 2.0, 0.0, 1.0))
    return chord


def project2d(dataset: Dataset, axis_a: int, axis_b: int) -> np.ndarray:
    """The (axis_a, axis_b) coordinates of every point, order-preserving, as (n, 2)."""
    if dataset.space.kind == HAMMING:
        raise InvalidInputError("project2d requires a real-vector space")
    d = dataset.space.d
    for ax in (axis_a, axis_b):
        if not 0 <= ax < d:
            raise InvalidInputError(f"axis {ax} out of range for dimension {d}")
    if axis_a == axis_b:
        raise InvalidInputError("projection axes must be distinct")
    return dataset.points[:, [axis_a, axis_b]].copy()


# ---------------------------------------------------------------------------
# dataset files
#
# One JSON header line {format_version, kind, d, n, seed, metric_variant},
# then n lines: lowercase-hex packed bits for Hamming (d bits, most
# significant first, zero-padded to whole bytes), or d decimal floats with
# 17 significant digits, space-separated, for the real spaces.


def _hamming_line(space: SpaceKind, row: np.ndarray) -> str:
    nbytes = (space.d + 7) // 8
    return np.ascontiguousarray(row).view(np.uint8)[:nbytes].tobytes().hex()

def _real_line(row: np.ndarray) -> str:
    return " ".join(format(v, ".17g") for v in row)


def save_dataset(dataset: Dataset, path: str | os.PathLike) -> None:
    header = {
        "format_version": FORMAT_VERSION,
        "kind": dataset.space.kind,
        "d": dataset.space.d,
        "n": dataset.n,
        "seed": dataset.seed,
        "metric_variant": dataset.space.metric,
    }
    try:
        with open(path, "w") as fh:
            fh.write(json.dumps(header) + "\n")
            if dataset.space.kind == HAMMING:
                for row in dataset.points:
                    fh.write(_hamming_line(dataset.space, row) + "\n")
            else:
                for row in dataset.points:
                    fh.write(_real_line(row) + "\n")
    except OSError as e:
        raise OSError(f"failed to write dataset file {path}: {e}") from e


def load_dataset(path: str | os.PathLike) -> Dataset:
    try:
        with open(path) as fh:
            header = json.loads(fh.readline())
            lines = [line.strip() for line in fh if line.strip()]
    except OSError as e:
        raise OSError(f"failed to read dataset file {path}: {e}") from e
    kind = header["kind"]
    d = header["d"]
    n = header["n"]
    metric = header.get("metric_variant")
    space = SpaceKind(kind, d, metric)
    if len(lines) != n:
        raise InvalidInputError(f"{path}: header says n={n} but file has {len(lines)} point lines")
    if kind == HAMMING:
        nbytes = (d + 7) // 8
        words = space.words
        raw = np.zeros((n, words * 8), dtype=np.uint8)
        for i, line in enumerate(lines):
            b = bytes.fromhex(line)
            if len(b) != nbytes:
                raise InvalidInputError(f"{path}: line {i + 2} has {len(b)} bytes, expected {nbytes}")
            raw[i, :nbytes] = np.frombuffer(b, dtype=np.uint8)
        pts = raw.view(np.uint64)
    else:
        pts = np.zeros((n, d))
        for i, line in enumerate(lines):
            vals = line.split()
            if len(vals) != d:
                raise InvalidInputError(f"{path}: line {i + 2} has {len(vals)} coordinates, expected {d}")
            pts[i] = [float(v) for v in vals]
    _validate_points(space, pts)
    return Dataset(space, _freeze(pts), header["seed"])
