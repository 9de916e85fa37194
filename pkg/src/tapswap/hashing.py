"""The two hash functions the protocol keeps strictly apart.

SHA256 produces 32-byte digests (``bytes``) and drives taproot key tweaks
and signature challenges.  Poseidon produces elements of the SNARK scalar
field (``int`` mod :data:`SNARK_PRIME`) and gates the contract-chain claim.
Digests and field elements never mix: one is bytes, the other an integer.

The Poseidon instance is a width-3 sponge (rate 2, capacity 1) over the
BN254 scalar field; parameters live in :mod:`tapswap.poseidon_params` and
can be regenerated with ``tools/gen_poseidon_params.py``.
"""

import hashlib

from . import poseidon_params as pp
from .curve import Point, Q, serialize_point

SNARK_PRIME = pp.P_SNARK

MAX_SPONGE_INPUT = 8

_N_ROUNDS = pp.FULL_ROUNDS + pp.PARTIAL_ROUNDS
_HALF_FULL = pp.FULL_ROUNDS // 2


def sha256(data: bytes) -> bytes:
    """Plain SHA256 over the exact input bytes; 32-byte digest."""
    return hashlib.sha256(data).digest()


def _pow5(v: int) -> int:
    v2 = v * v % SNARK_PRIME
    return v2 * v2 % SNARK_PRIME * v % SNARK_PRIME


def poseidon_permutation(state: list) -> list:
    """One application of the width-3 Poseidon permutation."""
    s0, s1, s2 = state
    rc = pp.ROUND_CONSTANTS
    m = pp.MDS
    for r in range(_N_ROUNDS):
        s0 = (s0 + rc[3 * r]) % SNARK_PRIME
        s1 = (s1 + rc[3 * r + 1]) % SNARK_PRIME
        s2 = (s2 + rc[3 * r + 2]) % SNARK_PRIME
        s0 = _pow5(s0)
        if r < _HALF_FULL or r >= _HALF_FULL + pp.PARTIAL_ROUNDS:
            s1 = _pow5(s1)
            s2 = _pow5(s2)
        s0, s1, s2 = (
            (m[0][0] * s0 + m[0][1] * s1 + m[0][2] * s2) % SNARK_PRIME,
            (m[1][0] * s0 + m[1][1] * s1 + m[1][2] * s2) % SNARK_PRIME,
            (m[2][0] * s0 + m[2][1] * s1 + m[2][2] * s2) % SNARK_PRIME,
        )
    return [s0, s1, s2]


def poseidon_hash(limbs: list) -> int:
    """Sponge-mode Poseidon over 1..8 field elements.

    The input length is mixed into the capacity lane before absorbing, so
    [a] and [a, 0] hash differently.  Odd-length inputs absorb a zero in
    the final block.
    """
    if not 1 <= len(limbs) <= MAX_SPONGE_INPUT:
        raise ValueError(f"poseidon input arity must be 1..{MAX_SPONGE_INPUT}, got {len(limbs)}")
    for v in limbs:
        if not 0 <= v < SNARK_PRIME:
            raise ValueError("poseidon limb not reduced mod the SNARK field")
    state = [0, 0, len(limbs)]
    for i in range(0, len(limbs), 2):
        block = limbs[i : i + 2]
        state[0] = (state[0] + block[0]) % SNARK_PRIME
        if len(block) == 2:
            state[1] = (state[1] + block[1]) % SNARK_PRIME
        state = poseidon_permutation(state)
    return state[0]


def tweak_scalar(internal_key: Point, script_bytes: bytes) -> int:
    """Taproot-style commitment of a script to a key.

    SHA256 over the compressed internal key followed by the canonical
    script bytes, read big-endian and reduced mod the secp256k1 group
    order.  Deliberately NOT the mainnet tagged-hash/x-only scheme; this
    simulator fixes the plain-SHA256 variant.
    """
    if internal_key is None:
        raise ValueError("internal key must not be the identity")
    digest = sha256(serialize_point(internal_key) + script_bytes)
    return int.from_bytes(digest, "big") % Q
