"""Delayed-write channel primitives: y_i = x_{i - z_i} XOR w_i.

The channel writes either the current or the previous input bit (chosen by
the Bernoulli state z_i) and then flips the written bit with the Bernoulli
noise w_i.  Input, state and noise are mutually independent.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ChannelParams",
    "InputProcess",
    "BinarySequence",
    "sample_input",
    "sample_noise",
    "channel_law",
    "write_block",
    "simulate",
    "derive_seed",
]


def _check_unit(name: str, value) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def _check_length(n) -> int:
    n = int(n)
    if n < 1:
        raise ValueError(f"block length must be >= 1, got {n}")
    return n


@dataclass(frozen=True)
class ChannelParams:
    """Bernoulli parameters of the channel: p for the state, alpha for the noise."""

    p: float
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "p", _check_unit("p", self.p))
        object.__setattr__(self, "alpha", _check_unit("alpha", self.alpha))

    @property
    def p_bar(self) -> float:
        return 1.0 - self.p

    @property
    def alpha_bar(self) -> float:
        return 1.0 - self.alpha

    @property
    def flip_same(self) -> float:
        """P(y_i != x_i) when x_i == x_{i-1}: only the additive noise can flip."""
        return self.alpha

    @property
    def flip_diff(self) -> float:
        """P(y_i != x_i) when x_i != x_{i-1}: a delayed write or the noise, not both."""
        return self.p + self.alpha - 2.0 * self.alpha * self.p


IUD = "iud"
MARKOV1 = "markov1"


@dataclass(frozen=True)
class InputProcess:
    """Input law: i.u.d. bits, or a symmetric first-order Markov chain.

    The Markov chain flips with probability beta at every step and is
    started from its stationary (uniform) law, so marginals stay uniform.
    """

    kind: str
    beta: float | None = None

    def __post_init__(self):
        if self.kind == IUD:
            if self.beta is not None:
                raise ValueError("i.u.d. input takes no transition parameter")
        elif self.kind == MARKOV1:
            if self.beta is None:
                raise ValueError("Markov-1 input requires a transition probability beta")
            object.__setattr__(self, "beta", _check_unit("beta", self.beta))
        else:
            raise ValueError(f"unknown input process kind {self.kind!r}")

    @classmethod
    def iud(cls) -> "InputProcess":
        return cls(IUD)

    @classmethod
    def markov1(cls, beta) -> "InputProcess":
        return cls(MARKOV1, beta)

    @property
    def is_markov(self) -> bool:
        return self.kind == MARKOV1

    @property
    def transition_flip(self) -> float:
        """P(x_i != x_{i-1}); equals 1/2 for i.u.d. input."""
        return 0.5 if self.kind == IUD else self.beta


@dataclass(frozen=True, eq=False)
class BinarySequence:
    """A block of bits x_1..x_n plus the boundary bit standing in for x_0."""

    bits: np.ndarray
    boundary_bit: int = 0

    def __post_init__(self):
        raw = np.asarray(self.bits)
        if raw.ndim != 1 or raw.size < 1:
            raise ValueError("bits must be a non-empty one-dimensional sequence")
        if not np.isin(raw, (0, 1)).all():
            raise ValueError("bits must all be 0 or 1")
        if self.boundary_bit not in (0, 1):
            raise ValueError(f"boundary_bit must be 0 or 1, got {self.boundary_bit!r}")
        bits = raw.astype(np.int8)
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "boundary_bit", int(self.boundary_bit))

    def __len__(self) -> int:
        return int(self.bits.size)

    def __eq__(self, other):
        if not isinstance(other, BinarySequence):
            return NotImplemented
        return self.boundary_bit == other.boundary_bit and np.array_equal(
            self.bits, other.bits
        )

    def with_boundary(self) -> np.ndarray:
        """Bits prefixed with the boundary bit, so position i holds x_i."""
        return np.concatenate(([self.boundary_bit], self.bits))


def sample_input(process: InputProcess, n, rng: np.random.Generator) -> BinarySequence:
    """Draw x_0..x_n from the input law.

    The boundary bit is uniform for both processes; the Markov chain then
    flips with probability beta at every step, i.u.d. bits are independent.
    """
    n = _check_length(n)
    if process.kind == IUD:
        raw = rng.integers(0, 2, size=n + 1, dtype=np.int8)
        return BinarySequence(raw[1:], boundary_bit=int(raw[0]))
    x0 = int(rng.integers(0, 2))
    flips = rng.random(n) < process.beta
    bits = (x0 + np.cumsum(flips)) % 2
    return BinarySequence(bits.astype(np.int8), boundary_bit=x0)


def sample_noise(
    params: ChannelParams, n, rng: np.random.Generator
) -> tuple[BinarySequence, BinarySequence]:
    """Draw the state block z ~ Bernoulli(p) and the noise block w ~ Bernoulli(alpha)."""
    n = _check_length(n)
    z = (rng.random(n) < params.p).astype(np.int8)
    w = (rng.random(n) < params.alpha).astype(np.int8)
    return BinarySequence(z), BinarySequence(w)


def channel_law(params: ChannelParams, x_prev: int, x_cur: int) -> float:
    """P(Y = 1 | x_{i-1} = x_prev, x_i = x_cur) with the state and noise marginalized."""
    if x_prev not in (0, 1) or x_cur not in (0, 1):
        raise ValueError("x_prev and x_cur must be 0 or 1")
    flip = params.flip_same if x_prev == x_cur else params.flip_diff
    return 1.0 - flip if x_cur == 1 else flip


def write_block(x: BinarySequence, z: BinarySequence, w: BinarySequence) -> BinarySequence:
    """Apply the writing rule y_i = x_{i - z_i} XOR w_i for i = 1..n."""
    n = len(x)
    if len(z) != n or len(w) != n:
        raise ValueError(f"length mismatch: x has {n} bits, z {len(z)}, w {len(w)}")
    full = x.with_boundary()
    picked = full[np.arange(1, n + 1) - z.bits]
    return BinarySequence(picked ^ w.bits)


def simulate(
    params: ChannelParams, process: InputProcess, n, rng: np.random.Generator
) -> tuple[BinarySequence, BinarySequence]:
    """Sample (x, z, w) in that fixed order and return the input/output pair."""
    x = sample_input(process, n, rng)
    z, w = sample_noise(params, n, rng)
    return x, write_block(x, z, w)


def derive_seed(master_seed: int, *, p, alpha, beta=None, replicate: int = 0) -> int:
    """Stable per-point seed so sweep points are reproducible in any order."""
    key = f"{int(master_seed)}|{float(p)!r}|{float(alpha)!r}|"
    key += f"{None if beta is None else float(beta)!r}|{int(replicate)}"
    digest = hashlib.sha256(key.encode("ascii")).digest()
    return int.from_bytes(digest[:16], "big")
