"""Discretized loops in SU(n) and their left-trivialized tangent fields.

A loop is sampled at N uniform angles theta_j = 2 pi j / N with N a power
of two, so derivatives in theta can be taken spectrally (exact for
band-limited data, exponentially accurate for the analytic loops produced
by the band-limited synthesis below).  A tangent vector at the loop g is
the curve t -> g exp(tX) for an su(n)-valued sample field X; only X is
stored.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rng import generator
from .su import (algebra_residual, exp_stack, project_algebra,
                 random_algebra, unitary_residual, UNITARY_TOL, ALGEBRA_TOL)

MIN_SAMPLES = 16


def _check_grid(num):
    if num < MIN_SAMPLES or num & (num - 1):
        raise ValueError("sample count must be a power of two >= %d"
                         % MIN_SAMPLES)


def theta_grid(num_samples):
    return 2.0 * np.pi * np.arange(num_samples) / num_samples


@dataclass(frozen=True)
class DiscreteLoop:
    """N samples of a smooth map from the circle into SU(n)."""

    samples: np.ndarray

    def __post_init__(self):
        samples = np.ascontiguousarray(self.samples, dtype=np.complex128)
        if samples.ndim != 3 or samples.shape[1] != samples.shape[2]:
            raise ValueError("loop samples must have shape (N, n, n)")
        _check_grid(samples.shape[0])
        frob, det = unitary_residual(samples)
        if frob > UNITARY_TOL or det > UNITARY_TOL:
            raise ValueError("loop samples leave SU(n): unitarity %.3e, "
                             "det %.3e" % (frob, det))
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def num_samples(self):
        return self.samples.shape[0]

    @property
    def dim(self):
        return self.samples.shape[1]

    def multiply(self, other):
        return DiscreteLoop(self.samples @ other.samples)

    def inverse(self):
        return DiscreteLoop(np.conjugate(np.swapaxes(self.samples, 1, 2)))


@dataclass(frozen=True)
class LoopTangent:
    """Left-trivialized tangent field: su(n)-valued samples on the grid."""

    samples: np.ndarray

    def __post_init__(self):
        samples = np.ascontiguousarray(self.samples, dtype=np.complex128)
        if samples.ndim != 3 or samples.shape[1] != samples.shape[2]:
            raise ValueError("tangent samples must have shape (N, n, n)")
        _check_grid(samples.shape[0])
        frob, tr = algebra_residual(samples)
        if frob > ALGEBRA_TOL or tr > ALGEBRA_TOL:
            raise ValueError("tangent samples leave su(n): skew %.3e, "
                             "trace %.3e" % (frob, tr))
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def num_samples(self):
        return self.samples.shape[0]

    @property
    def dim(self):
        return self.samples.shape[1]

    def __add__(self, other):
        return LoopTangent(self.samples + other.samples)

    def __sub__(self, other):
        return LoopTangent(self.samples - other.samples)

    def __neg__(self):
        return LoopTangent(-self.samples)

    def __rmul__(self, scalar):
        if isinstance(scalar, complex) and scalar.imag:
            raise TypeError("su(n) is a real vector space: scalars must be real")
        return LoopTangent(float(scalar) * self.samples)

    __mul__ = __rmul__


def constant_loop(dim, num_samples, matrix=None):
    if matrix is None:
        matrix = np.eye(dim, dtype=np.complex128)
    return DiscreteLoop(np.broadcast_to(matrix, (num_samples, dim, dim)).copy())


def zero_tangent(dim, num_samples):
    return LoopTangent(np.zeros((num_samples, dim, dim), dtype=np.complex128))


def conjugate_tangent(conjugator, tangent):
    """Samplewise g X g^{-1}; with conjugator = g2.inverse() this is the
    adjoint action Ad(g2^{-1}) appearing in the merge pushforward."""
    g = conjugator.samples
    gi = np.conjugate(np.swapaxes(g, 1, 2))
    return LoopTangent(project_algebra(g @ tangent.samples @ gi))


def displace(loop, tangent, amount):
    """The loop g exp(t X), the basic chart around g."""
    return DiscreteLoop(loop.samples @ exp_stack(amount * tangent.samples))


# ---------------------------------------------------------------------------
# spectral calculus on the uniform grid

def spectral_derivative(values):
    """d/dtheta of a periodic sample array along axis 0.

    Multiplies mode k by ik over the centered alias range and zeroes the
    Nyquist mode.
    """
    values = np.asarray(values)
    num = values.shape[0]
    k = np.fft.fftfreq(num, d=1.0 / num)
    k[num // 2] = 0.0  # Nyquist
    spec = np.fft.fft(values, axis=0)
    shape = (num,) + (1,) * (values.ndim - 1)
    return np.fft.ifft(spec * (1j * k).reshape(shape), axis=0)


def theta_derivative(loop):
    """d/dtheta of a loop (or of any (N, n, n) sample array)."""
    samples = loop.samples if isinstance(loop, (DiscreteLoop, LoopTangent)) \
        else np.asarray(loop, dtype=np.complex128)
    return spectral_derivative(samples)


def right_log_derivative(loop):
    """(d_theta g) g^{-1}: the su(n)-valued angular variation of the loop."""
    deriv = spectral_derivative(loop.samples)
    return deriv @ np.conjugate(np.swapaxes(loop.samples, 1, 2))


def circle_integral(values):
    """Trapezoidal rule on the periodic grid: (2 pi / N) * sum."""
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 1:
        raise ValueError("circle_integral expects a 1-D real sample array")
    return float(2.0 * np.pi * values.sum() / values.shape[0])


_FD8 = np.array([1.0 / 280, -4.0 / 105, 1.0 / 5, -4.0 / 5,
                 4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280])
_FD8_OFFSETS = (-4, -3, -2, -1, 1, 2, 3, 4)


def fd_derivative8(values):
    """8th-order centered finite difference on the periodic grid
    (independent cross-check of the spectral derivative)."""
    values = np.asarray(values)
    num = values.shape[0]
    h = 2.0 * np.pi / num
    out = np.zeros_like(values, dtype=np.complex128)
    for coeff, off in zip(_FD8, _FD8_OFFSETS):
        out += coeff * np.roll(values, -off, axis=0)
    return out / h


# ---------------------------------------------------------------------------
# seeded synthesis of smooth band-limited inputs

LOOP_AMPLITUDE = 0.4
TANGENT_AMPLITUDE = 0.5


def random_smooth_loop(seed, dim, num_samples, modes, stream=0):
    """exp of a random band-limited su(n) field with 1/k^2 mode decay.

    The Fourier data depends only on (seed, stream, dim, modes), so the
    same seed sampled at 2N refines the same smooth loop.
    """
    _check_grid(num_samples)
    if modes > num_samples // 8:
        raise ValueError("modes must be <= N/8 for spectral headroom")
    rng = generator(seed, stream)
    theta = theta_grid(num_samples)
    field = np.zeros((num_samples, dim, dim), dtype=np.complex128)
    for k in range(1, modes + 1):
        a_k = random_algebra(rng, dim, LOOP_AMPLITUDE / k**2)
        b_k = random_algebra(rng, dim, LOOP_AMPLITUDE / k**2)
        field += np.cos(k * theta)[:, None, None] * a_k
        field += np.sin(k * theta)[:, None, None] * b_k
    return DiscreteLoop(exp_stack(field))


def random_smooth_tangent(seed, dim, num_samples, modes, stream=0):
    """Random band-limited su(n)-valued tangent field (includes a constant
    mode), with the same resolution-independence contract as the loops."""
    _check_grid(num_samples)
    if modes > num_samples // 8:
        raise ValueError("modes must be <= N/8 for spectral headroom")
    rng = generator(seed, stream)
    theta = theta_grid(num_samples)
    field = np.zeros((num_samples, dim, dim), dtype=np.complex128)
    field += random_algebra(rng, dim, TANGENT_AMPLITUDE)[None, :, :]
    for k in range(1, modes + 1):
        c_k = random_algebra(rng, dim, TANGENT_AMPLITUDE / (1 + k**2))
        d_k = random_algebra(rng, dim, TANGENT_AMPLITUDE / (1 + k**2))
        field += np.cos(k * theta)[:, None, None] * c_k
        field += np.sin(k * theta)[:, None, None] * d_k
    return LoopTangent(field)


# ---------------------------------------------------------------------------
# loop file format: header "n N", then N blocks of n*n "re im" entries

def parse_loop(text):
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("loop file must start with 'n N'")
    try:
        dim, num = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ValueError("loop header must be two integers 'n N'")
    need = 2 * num * dim * dim
    body = tokens[2:]
    if len(body) != need:
        raise ValueError("expected %d re/im values, found %d"
                         % (need, len(body)))
    try:
        flat = np.array([float(t) for t in body], dtype=np.float64)
    except ValueError:
        raise ValueError("loop entries must be real numbers")
    re = flat[0::2].reshape(num, dim, dim)
    im = flat[1::2].reshape(num, dim, dim)
    return DiscreteLoop(re + 1j * im)


def format_loop(loop):
    lines = ["%d %d" % (loop.dim, loop.num_samples)]
    for sample in loop.samples:
        for row in sample:
            lines.append(" ".join("%.17g %.17g" % (z.real, z.imag)
                                  for z in row))
    return "\n".join(lines) + "\n"


def load_loop(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_loop(fh.read())
