"""Taproot-style UTXO chain simulator.

Outputs are spendable by key path (one signature under the output key) or
by script path (reveal the committed leaf and satisfy it after its
locktime).  The output stores only a hash of the leaf, so nothing about
the alternative path touches the chain unless the refund branch runs --
the property the swap's untraceability argument rests on.

A second, deliberately transparent output flavor carries a classic HTLC
script in the clear (hash value, keys, locktime all visible).  It exists
for the classic-swap baseline scenarios that the footprint auditor diffs
against.

Locktimes are absolute block heights.  Fees are zero.  Script-path
witnesses are checked against the current height at broadcast (an early
refund attempt is rejected outright, not queued); a transaction-level
locktime field instead keeps a transaction waiting in the mempool until
its height arrives.  One chain instance is a single-writer state machine;
run several instances for multichain scenarios.
"""

import struct
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from ..curve import Point, deserialize_point, generator_mul, serialize_point
from ..escrow import LEAF_BYTES_LEN, ScriptLeaf, canonical_script_bytes, leaf_commitment
from ..hashing import sha256
from ..rng import DeterministicRng
from ..schnorr import sign, verify_bytes

Outpoint = Tuple[str, int]


class TxRejected(Exception):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


@dataclass(frozen=True)
class HtlcScript:
    """Classic hashed-timelock condition, stored on the output in the clear."""

    hash_value: bytes  # SHA256 digest of the secret
    claim_key: Point
    refund_key: Point
    locktime: int


@dataclass(frozen=True)
class TxOutput:
    amount: int
    spend_key: Optional[Point] = None
    leaf_commitment_hash: Optional[bytes] = None
    htlc: Optional[HtlcScript] = None

    def __post_init__(self):
        if self.amount <= 0:
            raise ValueError("output amount must be positive")
        if (self.spend_key is None) == (self.htlc is None):
            raise ValueError("output is either key-spendable or an explicit HTLC")


@dataclass(frozen=True)
class KeyPathWitness:
    signature: bytes

    def schema(self) -> dict:
        return {"type": "key_path", "signature": self.signature.hex()}


@dataclass(frozen=True)
class ScriptPathWitness:
    leaf_bytes: bytes
    signature: bytes

    def schema(self) -> dict:
        return {
            "type": "script_path",
            "leaf": self.leaf_bytes.hex(),
            "signature": self.signature.hex(),
        }


@dataclass(frozen=True)
class HtlcClaimWitness:
    preimage: bytes
    signature: bytes

    def schema(self) -> dict:
        return {
            "type": "htlc_claim",
            "preimage": self.preimage.hex(),
            "signature": self.signature.hex(),
        }


@dataclass(frozen=True)
class HtlcRefundWitness:
    signature: bytes

    def schema(self) -> dict:
        return {"type": "htlc_refund", "signature": self.signature.hex()}


Witness = Union[KeyPathWitness, ScriptPathWitness, HtlcClaimWitness, HtlcRefundWitness]


@dataclass(frozen=True)
class TxInput:
    outpoint: Outpoint
    witness: Witness


@dataclass(frozen=True)
class UtxoTransaction:
    inputs: Tuple[TxInput, ...]
    outputs: Tuple[TxOutput, ...]
    locktime: int = 0

    def digest(self) -> bytes:
        """Signing digest and txid: canonical serialization minus witnesses."""
        out = struct.pack(">I", len(self.inputs))
        for txin in self.inputs:
            out += bytes.fromhex(txin.outpoint[0]) + struct.pack(">I", txin.outpoint[1])
        out += struct.pack(">I", len(self.outputs))
        for txout in self.outputs:
            out += struct.pack(">Q", txout.amount)
            if txout.spend_key is not None:
                out += b"\x01" + serialize_point(txout.spend_key)
                out += txout.leaf_commitment_hash or bytes(32)
            else:
                h = txout.htlc
                out += b"\x02" + h.hash_value
                out += serialize_point(h.claim_key) + serialize_point(h.refund_key)
                out += struct.pack(">Q", h.locktime)
        out += struct.pack(">Q", self.locktime)
        return sha256(out)

    def txid(self) -> str:
        return self.digest().hex()


def _output_json(txout: TxOutput) -> dict:
    if txout.spend_key is not None:
        rec = {
            "kind": "key",
            "amount": txout.amount,
            "spend_key": serialize_point(txout.spend_key).hex(),
        }
        if txout.leaf_commitment_hash:
            rec["leaf_commitment"] = txout.leaf_commitment_hash.hex()
        return rec
    h = txout.htlc
    return {
        "kind": "htlc",
        "amount": txout.amount,
        "hash_value": h.hash_value.hex(),
        "claim_key": serialize_point(h.claim_key).hex(),
        "refund_key": serialize_point(h.refund_key).hex(),
        "locktime": h.locktime,
    }


class UtxoChain:
    def __init__(self, chain_id: str = "utxo"):
        self.chain_id = chain_id
        self.height = 0
        self.utxos: Dict[Outpoint, TxOutput] = {}
        self.mempool: List[UtxoTransaction] = []
        self.log: List[dict] = []
        self.rejections: List[dict] = []
        self._grant_counter = 0

    # -- funding ------------------------------------------------------------

    def grant(self, amount: int, spend_key: Point) -> Outpoint:
        """Mint a genesis output; the only place value enters the chain."""
        txid = sha256(
            f"{self.chain_id}/genesis/{self._grant_counter}".encode()
        ).hex()
        self._grant_counter += 1
        outpoint = (txid, 0)
        txout = TxOutput(amount, spend_key)
        self.utxos[outpoint] = txout
        self.log.append(
            {
                "txid": txid,
                "height": self.height,
                "genesis": True,
                "inputs": [],
                "outputs": [_output_json(txout)],
                "locktime": 0,
            }
        )
        return outpoint

    # -- validation ---------------------------------------------------------

    def _validate_witness(self, txin: TxInput, digest: bytes, at_height: int) -> None:
        utxo = self.utxos.get(txin.outpoint)
        if utxo is None:
            raise TxRejected("double-spend", f"unknown or spent outpoint {txin.outpoint}")
        wit = txin.witness
        if isinstance(wit, KeyPathWitness):
            if utxo.spend_key is None:
                raise TxRejected("witness-invalid", "key-path spend of an HTLC output")
            if not verify_bytes(utxo.spend_key, digest, wit.signature):
                raise TxRejected("witness-invalid", "bad key-path signature")
        elif isinstance(wit, ScriptPathWitness):
            if utxo.spend_key is None or utxo.leaf_commitment_hash is None:
                raise TxRejected("witness-invalid", "output has no committed leaf")
            if sha256(wit.leaf_bytes) != utxo.leaf_commitment_hash:
                raise TxRejected("witness-invalid", "revealed leaf does not match commitment")
            if len(wit.leaf_bytes) != LEAF_BYTES_LEN:
                raise TxRejected("witness-invalid", "malformed leaf bytes")
            refund_key = deserialize_point(wit.leaf_bytes[:33])
            (leaf_locktime,) = struct.unpack(">Q", wit.leaf_bytes[33:])
            if at_height < leaf_locktime:
                raise TxRejected(
                    "locktime-not-reached",
                    f"script path valid from height {leaf_locktime}, now {at_height}",
                )
            if not verify_bytes(refund_key, digest, wit.signature):
                raise TxRejected("witness-invalid", "bad script-path signature")
        elif isinstance(wit, HtlcClaimWitness):
            if utxo.htlc is None:
                raise TxRejected("witness-invalid", "claim witness on non-HTLC output")
            if sha256(wit.preimage) != utxo.htlc.hash_value:
                raise TxRejected("witness-invalid", "wrong preimage")
            if not verify_bytes(utxo.htlc.claim_key, digest, wit.signature):
                raise TxRejected("witness-invalid", "bad claim signature")
        elif isinstance(wit, HtlcRefundWitness):
            if utxo.htlc is None:
                raise TxRejected("witness-invalid", "refund witness on non-HTLC output")
            if at_height < utxo.htlc.locktime:
                raise TxRejected(
                    "locktime-not-reached",
                    f"HTLC refund valid from height {utxo.htlc.locktime}, now {at_height}",
                )
            if not verify_bytes(utxo.htlc.refund_key, digest, wit.signature):
                raise TxRejected("witness-invalid", "bad refund signature")
        else:
            raise TxRejected("witness-invalid", f"unknown witness type {type(wit)}")

    def _validate(self, tx: UtxoTransaction, at_height: int, reserved: set) -> None:
        if not tx.inputs or not tx.outputs:
            raise TxRejected("witness-invalid", "transaction needs inputs and outputs")
        seen = set()
        total_in = 0
        digest = tx.digest()
        for txin in tx.inputs:
            if txin.outpoint in seen or txin.outpoint in reserved:
                raise TxRejected("double-spend", f"outpoint {txin.outpoint} already spent")
            seen.add(txin.outpoint)
            self._validate_witness(txin, digest, at_height)
            total_in += self.utxos[txin.outpoint].amount
        total_out = sum(o.amount for o in tx.outputs)
        if total_in < total_out:
            raise TxRejected("value-imbalance", f"in {total_in} < out {total_out}")

    # -- state transitions ----------------------------------------------------

    def broadcast(self, tx: UtxoTransaction) -> str:
        """Admit to the mempool after full validation at the current height."""
        reserved = {i.outpoint for m in self.mempool for i in m.inputs}
        try:
            self._validate(tx, self.height, reserved)
        except TxRejected as exc:
            self.rejections.append(
                {"height": self.height, "txid": tx.txid(), "reason": exc.reason}
            )
            raise
        self.mempool.append(tx)
        return tx.txid()

    def mine_blocks(self, n: int = 1) -> int:
        if n < 1:
            raise ValueError("must mine at least one block")
        for _ in range(n):
            self.height += 1
            still_waiting = []
            for tx in self.mempool:
                if tx.locktime > self.height:
                    still_waiting.append(tx)
                    continue
                try:
                    self._validate(tx, self.height, set())
                except TxRejected as exc:
                    self.rejections.append(
                        {"height": self.height, "txid": tx.txid(), "reason": exc.reason}
                    )
                    continue
                self._apply(tx)
            self.mempool = still_waiting
        return self.height

    def _apply(self, tx: UtxoTransaction) -> None:
        txid = tx.txid()
        record_inputs = []
        for txin in tx.inputs:
            del self.utxos[txin.outpoint]
            record_inputs.append(
                {
                    "txid": txin.outpoint[0],
                    "vout": txin.outpoint[1],
                    "witness": txin.witness.schema(),
                }
            )
        for index, txout in enumerate(tx.outputs):
            self.utxos[(txid, index)] = txout
        self.log.append(
            {
                "txid": txid,
                "height": self.height,
                "inputs": record_inputs,
                "outputs": [_output_json(o) for o in tx.outputs],
                "locktime": tx.locktime,
            }
        )

    # -- spend builders -------------------------------------------------------

    def spend_key_path(
        self,
        outpoint: Outpoint,
        dest_key: Point,
        sk: int,
        rng: DeterministicRng,
        dest_leaf_commitment: Optional[bytes] = None,
    ) -> UtxoTransaction:
        utxo = self.utxos.get(outpoint)
        if utxo is None:
            raise TxRejected("double-spend", f"unknown or spent outpoint {outpoint}")
        if utxo.spend_key is None or generator_mul(sk) != utxo.spend_key:
            raise TxRejected("key-mismatch", "secret does not match output key")
        skeleton = UtxoTransaction(
            (TxInput(outpoint, KeyPathWitness(b"\x00" * 65)),),
            (TxOutput(utxo.amount, dest_key, dest_leaf_commitment),),
        )
        sig = sign(sk, skeleton.digest(), rng)
        return UtxoTransaction(
            (TxInput(outpoint, KeyPathWitness(sig.to_bytes())),), skeleton.outputs
        )

    def spend_script_path(
        self,
        outpoint: Outpoint,
        leaf: ScriptLeaf,
        sk_refund: int,
        at_height: int,
        rng: DeterministicRng,
        dest_key: Optional[Point] = None,
    ) -> UtxoTransaction:
        utxo = self.utxos.get(outpoint)
        if utxo is None:
            raise TxRejected("double-spend", f"unknown or spent outpoint {outpoint}")
        if utxo.leaf_commitment_hash != leaf_commitment(leaf):
            raise TxRejected("leaf-mismatch", "leaf does not match output commitment")
        if at_height < leaf.locktime:
            raise TxRejected(
                "premature-spend", f"locktime {leaf.locktime} not reached at {at_height}"
            )
        if generator_mul(sk_refund) != leaf.refund_key:
            raise TxRejected("key-mismatch", "secret does not match refund key")
        dest = dest_key if dest_key is not None else leaf.refund_key
        leaf_bytes = canonical_script_bytes(leaf)
        skeleton = UtxoTransaction(
            (TxInput(outpoint, ScriptPathWitness(leaf_bytes, b"\x00" * 65)),),
            (TxOutput(utxo.amount, dest),),
            locktime=leaf.locktime,
        )
        sig = sign(sk_refund, skeleton.digest(), rng)
        return UtxoTransaction(
            (TxInput(outpoint, ScriptPathWitness(leaf_bytes, sig.to_bytes())),),
            skeleton.outputs,
            locktime=leaf.locktime,
        )

    # -- inspection -----------------------------------------------------------

    def balance_of(self, key: Point) -> int:
        return sum(
            o.amount for o in self.utxos.values() if o.spend_key == key
        )

    def find_utxo(self, spend_key: Point) -> Optional[Outpoint]:
        for outpoint, txout in self.utxos.items():
            if txout.spend_key == spend_key:
                return outpoint
        return None

    def is_confirmed(self, txid: str) -> bool:
        return any(rec["txid"] == txid for rec in self.log)

    def export_log(self) -> List[dict]:
        return [dict(rec) for rec in self.log]

    def replay_check(self) -> bool:
        """Rebuild the utxo set from the log and compare bit-exactly."""
        rebuilt: Dict[Outpoint, dict] = {}
        for rec in self.log:
            for txin in rec["inputs"]:
                del rebuilt[(txin["txid"], txin["vout"])]
            for index, out in enumerate(rec["outputs"]):
                rebuilt[(rec["txid"], index)] = out
        current = {
            outpoint: _output_json(txout) for outpoint, txout in self.utxos.items()
        }
        return rebuilt == current
