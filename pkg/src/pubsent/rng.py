"""Portable 64-bit pseudo-random generation.

``Xoshiro256`` runs ``LANES`` independent xoshiro256** streams side by side
in numpy ``uint64`` arrays and emits their outputs interleaved, step by
step (lane 0, lane 1, ..., lane LANES-1, then the next step). Lane ``j``
is seeded with splitmix64 outputs ``4j .. 4j+3`` of the user seed. The
whole sequence is therefore a fixed function of the seed on every
platform, independent of numpy's own generators.
"""

import numpy as np

__all__ = ["MASK64", "LANES", "splitmix64", "mix64", "Xoshiro256"]

MASK64 = (1 << 64) - 1
LANES = 256
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z):
    """The splitmix64 output finalizer on a Python int."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def splitmix64(seed):
    """Yield the splitmix64 sequence for ``seed`` forever."""
    state = seed & MASK64
    while True:
        state = (state + GOLDEN_GAMMA) & MASK64
        yield mix64(state)


_U53_SCALE = 2.0**-53


def _rotl(x, k):
    return (x << np.uint64(k)) | (x >> np.uint64(64 - k))


class Xoshiro256:
    """Lane-parallel xoshiro256** generator.

    Not thread safe; each owner should hold its own instance.
    """

    def __init__(self, seed):
        seed = int(seed)
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        words = splitmix64(seed)
        init = [[next(words) for _ in range(4)] for _ in range(LANES)]
        self._s = np.array(init, dtype=np.uint64).T.copy()
        self._buffer = np.empty(0, dtype=np.uint64)

    @classmethod
    def from_state(cls, state):
        """Build a generator from explicit lane states, shape (4, LANES)."""
        gen = cls.__new__(cls)
        gen.seed = None
        gen._s = np.array(state, dtype=np.uint64).reshape(4, -1).copy()
        gen._buffer = np.empty(0, dtype=np.uint64)
        return gen

    def _step(self):
        s0, s1, s2, s3 = self._s
        result = _rotl(s1 * np.uint64(5), 7) * np.uint64(9)
        t = s1 << np.uint64(17)
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        self._s[3] = _rotl(s3, 45)
        return result

    def next_u64(self, count):
        """Return the next ``count`` raw 64-bit outputs."""
        count = int(count)
        have = self._buffer.size
        if count <= have:
            out, self._buffer = self._buffer[:count], self._buffer[count:]
            return out
        lanes = self._s.shape[1]
        steps = -(-(count - have) // lanes)
        block = np.empty((steps, lanes), dtype=np.uint64)
        for i in range(steps):
            block[i] = self._step()
        stream = np.concatenate([self._buffer, block.ravel()])
        out, self._buffer = stream[:count], stream[count:]
        return out

    def uniform(self, count):
        """Doubles on the open interval (0, 1) with 53 random bits."""
        bits = self.next_u64(count) >> np.uint64(11)
        return (bits.astype(np.float64) + 0.5) * _U53_SCALE

    def normal(self, count):
        """Standard normal variates via the Box-Muller transform."""
        pairs = -(-int(count) // 2)
        u = self.uniform(2 * pairs)
        r = np.sqrt(-2.0 * np.log(u[0::2]))
        phi = 2.0 * np.pi * u[1::2]
        z = np.empty(2 * pairs)
        z[0::2] = r * np.cos(phi)
        z[1::2] = r * np.sin(phi)
        return z[:count]
