"""Escrow key derivation: committing a refund script into a public key.

An escrow key is X + pk_B + t*G where t hashes the internal key X + pk_B
together with the alternative script.  Its secret counterpart
x + sk_B + t becomes computable by the counterparty the moment x is
revealed, which is the whole trick: the on-chain output looks like any
other key until (and unless) the refund script is used.

Script serialization is fixed here as 33-byte compressed refund key
followed by an 8-byte big-endian locktime; script trees hold exactly one
leaf.
"""

import struct
from dataclasses import dataclass
from typing import List, Optional

from .curve import (
    Point,
    Q,
    deserialize_point,
    generator_mul,
    point_add,
    serialize_point,
)
from .hashing import SNARK_PRIME, sha256, tweak_scalar

LEAF_BYTES_LEN = 41


@dataclass(frozen=True)
class ScriptLeaf:
    """Alternative spending path: refund key plus absolute locktime."""

    refund_key: Point
    locktime: int

    def __post_init__(self):
        if self.refund_key is None:
            raise ValueError("leaf refund key must not be the identity")
        if self.locktime <= 0:
            raise ValueError("leaf locktime must be positive")


def canonical_script_bytes(leaf: ScriptLeaf) -> bytes:
    return serialize_point(leaf.refund_key) + struct.pack(">Q", leaf.locktime)


def leaf_from_bytes(data: bytes) -> ScriptLeaf:
    if len(data) != LEAF_BYTES_LEN:
        raise ValueError(f"leaf must be {LEAF_BYTES_LEN} bytes, got {len(data)}")
    refund_key = deserialize_point(data[:33])
    (locktime,) = struct.unpack(">Q", data[33:])
    return ScriptLeaf(refund_key, locktime)


def leaf_commitment(leaf: ScriptLeaf) -> bytes:
    """Digest an output stores instead of the script itself."""
    return sha256(canonical_script_bytes(leaf))


@dataclass(frozen=True)
class EscrowKeySet:
    secret_share_point: Point  # X = x*G
    counterparty_pk: Point
    leaf: ScriptLeaf
    escrow_pk: Point


def derive_escrow_pk(
    secret_share_point: Point, counterparty_pk: Point, leaf: ScriptLeaf
) -> EscrowKeySet:
    """Public-side derivation; either party can run it from public data."""
    if secret_share_point is None or counterparty_pk is None:
        raise ValueError("escrow derivation requires non-identity points")
    internal = point_add(secret_share_point, counterparty_pk)
    tweak = tweak_scalar(internal, canonical_script_bytes(leaf))
    escrow_pk = point_add(internal, generator_mul(tweak))
    return EscrowKeySet(secret_share_point, counterparty_pk, leaf, escrow_pk)


def derive_escrow_sk(x: int, counterparty_sk: int, leaf: ScriptLeaf) -> int:
    """Secret-side derivation, runnable only once both x and sk are known.

    Returns x + sk + tweak mod q; its point always equals the escrow_pk
    produced by derive_escrow_pk on the matching public inputs.
    """
    if not 0 < x < Q:
        raise ValueError("x must be a nonzero reduced scalar")
    if not 0 < counterparty_sk < Q:
        raise ValueError("counterparty secret must be a nonzero reduced scalar")
    internal = point_add(generator_mul(x), generator_mul(counterparty_sk))
    tweak = tweak_scalar(internal, canonical_script_bytes(leaf))
    sk_esc = (x + counterparty_sk + tweak) % Q
    if sk_esc == 0:
        raise ValueError("degenerate escrow secret; resample x")
    return sk_esc


def verify_leaf_wellformed(
    leaf: ScriptLeaf, expected_refund_key: Point, min_locktime: int
) -> bool:
    """Responder-side script check: exactly the expected refund clause.

    The dataclass already guarantees there is a single clause; what is
    verified here is whose key it pays and that the locktime leaves the
    responder enough room.
    """
    if leaf.refund_key != expected_refund_key:
        return False
    return leaf.locktime >= min_locktime


# --- announcement record -------------------------------------------------
#
# The initiator's message payload: secret-share point, commitment hash,
# proof bytes, and one leg per escrow output.  Wire format is length-
# prefixed binary; transcripts re-export it as JSON via to_json().


@dataclass(frozen=True)
class AnnounceLeg:
    chain_id: str
    escrow_pk: Point
    leaf: ScriptLeaf
    funding_txid: str
    amount: int


@dataclass(frozen=True)
class AnnounceRecord:
    secret_share_point: Point  # X
    commitment: int  # h, SNARK field element
    proof: bytes
    legs: List[AnnounceLeg]


def _frame(data: bytes) -> bytes:
    return struct.pack(">I", len(data)) + data


def encode_announce(record: AnnounceRecord) -> bytes:
    out = _frame(serialize_point(record.secret_share_point))
    out += _frame(record.commitment.to_bytes(32, "big"))
    out += _frame(record.proof)
    out += struct.pack(">I", len(record.legs))
    for leg in record.legs:
        out += _frame(leg.chain_id.encode())
        out += _frame(serialize_point(leg.escrow_pk))
        out += _frame(canonical_script_bytes(leg.leaf))
        out += _frame(leg.funding_txid.encode())
        out += struct.pack(">Q", leg.amount)
    return out


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise ValueError("truncated announce record")
        chunk = self.data[self.pos : self.pos + n]
        self.pos += n
        return chunk

    def take_framed(self) -> bytes:
        (n,) = struct.unpack(">I", self.take(4))
        return self.take(n)


def decode_announce(data: bytes) -> AnnounceRecord:
    r = _Reader(data)
    x_point = deserialize_point(r.take_framed())
    commitment = int.from_bytes(r.take_framed(), "big")
    if commitment >= SNARK_PRIME:
        raise ValueError("commitment not reduced mod the SNARK field")
    proof = r.take_framed()
    (n_legs,) = struct.unpack(">I", r.take(4))
    legs = []
    for _ in range(n_legs):
        chain_id = r.take_framed().decode()
        escrow_pk = deserialize_point(r.take_framed())
        leaf = leaf_from_bytes(r.take_framed())
        funding_txid = r.take_framed().decode()
        (amount,) = struct.unpack(">Q", r.take(8))
        legs.append(AnnounceLeg(chain_id, escrow_pk, leaf, funding_txid, amount))
    if r.pos != len(data):
        raise ValueError("trailing bytes in announce record")
    return AnnounceRecord(x_point, commitment, proof, legs)


def announce_to_json(record: AnnounceRecord) -> dict:
    return {
        "secret_share_point": serialize_point(record.secret_share_point).hex(),
        "commitment": f"{record.commitment:064x}",
        "proof": record.proof.hex(),
        "legs": [
            {
                "chain_id": leg.chain_id,
                "escrow_pk": serialize_point(leg.escrow_pk).hex(),
                "leaf": canonical_script_bytes(leg.leaf).hex(),
                "funding_txid": leg.funding_txid,
                "amount": leg.amount,
            }
            for leg in record.legs
        ],
    }
