"""Schnorr signatures over secp256k1.

Challenge is the two-argument form c = SHA256(m || X_sigma) mod q; the
key-prefixed variant (hashing the public key as well) is intentionally not
used here.  Signatures are (X_sigma, x_sigma) and verify by checking
x_sigma * G == X_sigma + c * pk.

The property everything downstream leans on: signing under sk + t verifies
under pk + t*G for any tweak t, which is what makes tweaked escrow keys
spendable with an ordinary-looking signature.
"""

from dataclasses import dataclass

from .curve import (
    Point,
    Q,
    deserialize_point,
    generator_mul,
    is_on_curve,
    point_add,
    scalar_mul,
    serialize_point,
)
from .hashing import sha256
from .rng import DeterministicRng

SIGNATURE_SIZE = 65  # 33-byte compressed nonce point + 32-byte scalar


@dataclass(frozen=True)
class KeyPair:
    sk: int
    pk: Point


@dataclass(frozen=True)
class Signature:
    nonce_point: Point  # X_sigma
    response: int  # x_sigma

    def to_bytes(self) -> bytes:
        return serialize_point(self.nonce_point) + self.response.to_bytes(32, "big")

    @classmethod
    def from_bytes(cls, data: bytes) -> "Signature":
        if len(data) != SIGNATURE_SIZE:
            raise ValueError(f"signature must be {SIGNATURE_SIZE} bytes, got {len(data)}")
        nonce_point = deserialize_point(data[:33])
        response = int.from_bytes(data[33:], "big")
        if response >= Q:
            raise ValueError("signature scalar not reduced")
        return cls(nonce_point, response)


def keygen(rng: DeterministicRng) -> KeyPair:
    sk = rng.next_scalar()
    return KeyPair(sk, generator_mul(sk))


def challenge(message: bytes, nonce_point: Point) -> int:
    return int.from_bytes(sha256(message + serialize_point(nonce_point)), "big") % Q


def sign(sk: int, message: bytes, rng: DeterministicRng) -> Signature:
    """Sign with a nonce derived from (rng seed, sk, message).

    Deterministic per (seed, key, message) so transcripts replay exactly;
    distinct seeds give distinct, independently valid signatures.
    """
    if not 0 < sk < Q:
        raise ValueError("signing key must be a nonzero reduced scalar")
    r = rng.derive_scalar(b"schnorr-nonce", sk.to_bytes(32, "big"), message)
    nonce_point = generator_mul(r)
    c = challenge(message, nonce_point)
    response = (r + sk * c) % Q
    return Signature(nonce_point, response)


def verify(pk: Point, message: bytes, sig: Signature) -> bool:
    """Total over arbitrary inputs: malformed or non-curve data rejects."""
    if pk is None or not is_on_curve(pk):
        return False
    if sig.nonce_point is None or not is_on_curve(sig.nonce_point):
        return False
    if not 0 <= sig.response < Q:
        return False
    c = challenge(message, sig.nonce_point)
    lhs = generator_mul(sig.response)
    rhs = point_add(sig.nonce_point, scalar_mul(c, pk))
    return lhs == rhs


def verify_bytes(pk: Point, message: bytes, sig_bytes: bytes) -> bool:
    """Wire-format verification; undecodable signatures reject, never raise."""
    try:
        sig = Signature.from_bytes(sig_bytes)
    except ValueError:
        return False
    return verify(pk, message, sig)
