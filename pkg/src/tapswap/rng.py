"""Deterministic randomness for reproducible scenario transcripts.

Every scalar a scenario draws comes from a SHA256 counter-mode stream keyed
by (seed, label), so a (config, seed) pair replays to byte-identical
transcripts on any platform.
"""

import hashlib
import secrets

from .curve import Q


class DeterministicRng:
    """SHA256 counter-mode byte stream with labelled sub-streams."""

    def __init__(self, seed: bytes, label: str = ""):
        self._key = hashlib.sha256(seed + b"/" + label.encode()).digest()
        self._counter = 0

    def child(self, label: str) -> "DeterministicRng":
        """Independent sub-stream; drawing from one never affects another."""
        return DeterministicRng(self._key, label)

    def next_bytes(self, n: int) -> bytes:
        out = b""
        while len(out) < n:
            out += hashlib.sha256(
                self._key + self._counter.to_bytes(8, "big")
            ).digest()
            self._counter += 1
        return out[:n]

    def next_scalar(self) -> int:
        """Uniform nonzero scalar mod the secp256k1 group order."""
        while True:
            k = int.from_bytes(self.next_bytes(32), "big")
            if 0 < k < Q:
                return k

    def next_int(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        nbytes = (bound.bit_length() + 15) // 8
        while True:
            v = int.from_bytes(self.next_bytes(nbytes), "big")
            if v < (1 << (8 * nbytes)) // bound * bound:
                return v % bound

    def derive_scalar(self, *parts: bytes) -> int:
        """Nonzero scalar fixed by (seed, parts); does not consume the stream.

        Used for signature nonces so replaying a scenario re-derives the
        exact same signatures.
        """
        material = self._key
        for part in parts:
            material += hashlib.sha256(part).digest()
        counter = 0
        while True:
            k = int.from_bytes(
                hashlib.sha256(material + counter.to_bytes(4, "big")).digest(), "big"
            )
            if 0 < k < Q:
                return k
            counter += 1


def fresh_system_rng(label: str = "") -> DeterministicRng:
    """Non-reproducible stream for interactive use; tests pass explicit seeds."""
    return DeterministicRng(secrets.token_bytes(32), label)
