"""Actor state machines executing the swap protocols over simulated chains.

One engine drives four flows behind a common transcript shape:

* ``single``     -- one escrow output, one contract lock, one secret x.
* ``multiple``   -- n escrow outputs on one chain gated by the same x.
* ``multichain`` -- escrow outputs spread over several UTXO chains.
* ``classic``    -- the plain hash-locked baseline (explicit HTLC scripts on
  the UTXO side, SHA256 contract mode) kept around so its on-chain
  footprint can be diffed against the taprootized flows.

The initiator funds escrow outputs, announces (X, h, proof, legs), and the
responder re-derives every escrow key, checks the proof, the leaves, the
deadline ordering and the fundings before locking the contract.  Any
failed check aborts the session; there is no renegotiation.  The deadline
rule enforced at announce time is lt_contract + reaction_blocks <= every
UTXO locktime.

A schedule is an explicit list of action tokens, so adversarial orderings,
withheld actions and fault injections are plain data.  All randomness
flows from the session seed; replaying (setup, seed, schedule) reproduces
the transcript byte for byte.
"""

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .chains import ContractChain, ContractError, TxRejected, UtxoChain
from .chains.contract import ContractStatus, claim_digest, refund_digest
from .chains.utxo import HtlcClaimWitness, HtlcRefundWitness, HtlcScript, KeyPathWitness, TxInput, TxOutput, UtxoTransaction
from .curve import Point, generator_mul, serialize_point
from .escrow import (
    AnnounceLeg,
    AnnounceRecord,
    EscrowKeySet,
    ScriptLeaf,
    announce_to_json,
    decode_announce,
    derive_escrow_pk,
    derive_escrow_sk,
    encode_announce,
    leaf_commitment,
    verify_leaf_wellformed,
)
from .hashing import sha256
from .rng import DeterministicRng
from .schnorr import KeyPair, keygen, sign
from . import zk

CONTRACT_CHAIN_ID = "contract"
ZK_SETUP_SEED = b"tapswap/zk-setup/v1"


class SwapPhase(Enum):
    INIT = "init"
    FUNDED = "funded"
    ANNOUNCED = "announced"
    LOCKED = "locked"
    CLAIMED = "claimed"
    COMPLETED = "completed"
    ABORTED = "aborted"


@dataclass(frozen=True)
class LegSpec:
    chain_id: str
    amount: int
    locktime: int


@dataclass(frozen=True)
class SwapSetup:
    variant: str  # single | multiple | multichain | classic
    legs: Tuple[LegSpec, ...]
    contract_amount: int
    contract_locktime: int
    reaction_blocks: int = 2
    distinct_refund_keys: bool = True
    faults: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.variant not in ("single", "multiple", "multichain", "classic"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant in ("single", "classic") and len(self.legs) != 1:
            raise ValueError(f"{self.variant} variant takes exactly one leg")
        if self.variant == "multiple" and len({l.chain_id for l in self.legs}) != 1:
            raise ValueError("multiple variant keeps all legs on one chain")
        if self.variant == "multichain" and len({l.chain_id for l in self.legs}) != len(
            self.legs
        ):
            raise ValueError("multichain variant takes one leg per chain")
        if not self.legs:
            raise ValueError("at least one leg required")


KNOWN_FAULTS = ("tamper-proof", "wrong-leaf", "early-refund", "withhold-sweep")


@dataclass
class ResponderView:
    """Everything the responder knows when checking an announcement."""

    bob_leg_pks: List[Point]
    expected_refund_pks: List[Point]
    expected_amounts: List[int]
    contract_locktime: int
    reaction_blocks: int
    verifying_params: zk.VerifyingParams
    chains: Dict[str, UtxoChain]


def responder_verify_announce(payload: bytes, view: ResponderView) -> Tuple[bool, str]:
    """All announcement checks, each failure with its own reject reason."""
    try:
        record = decode_announce(payload)
    except ValueError:
        return False, "malformed"
    if len(record.legs) != len(view.bob_leg_pks):
        return False, "malformed"

    min_locktime = None
    for leg in record.legs:
        if min_locktime is None or leg.leaf.locktime < min_locktime:
            min_locktime = leg.leaf.locktime
    if view.contract_locktime + view.reaction_blocks > min_locktime:
        return False, "deadlines"

    for index, leg in enumerate(record.legs):
        if not verify_leaf_wellformed(
            leg.leaf,
            view.expected_refund_pks[index],
            view.contract_locktime + view.reaction_blocks,
        ):
            return False, "leaf"
        expected = derive_escrow_pk(
            record.secret_share_point, view.bob_leg_pks[index], leg.leaf
        )
        if expected.escrow_pk != leg.escrow_pk:
            return False, "escrow-key"
        chain = view.chains.get(leg.chain_id)
        if chain is None or not chain.is_confirmed(leg.funding_txid):
            return False, "funding"
        if leg.amount != view.expected_amounts[index]:
            return False, "funding"
        funded = chain.find_utxo(leg.escrow_pk)
        if funded is None or chain.utxos[funded].amount != leg.amount:
            return False, "funding"
        if chain.utxos[funded].leaf_commitment_hash != leaf_commitment(leg.leaf):
            return False, "funding"

    try:
        instance = zk.StatementInstance(
            tuple(
                zk.scalar_to_limbs(record.secret_share_point[0])
                + zk.scalar_to_limbs(record.secret_share_point[1])
            ),
            record.commitment,
        )
        instance.validate()
    except ValueError:
        return False, "proof"
    if not zk.verify_bytes(view.verifying_params, instance, record.proof):
        return False, "proof"
    return True, "ok"


class SwapWorld:
    """Mutable protocol state: two actors, their chains, and a message log.

    Deep-copyable, so schedule enumeration can branch cheaply.
    """

    def __init__(self, setup: SwapSetup, seed: bytes):
        self.setup = setup
        self.seed = seed
        rng = DeterministicRng(seed, "swap-world")
        self.rng_alice = rng.child("alice")
        self.rng_bob = rng.child("bob")

        self.chains: Dict[str, UtxoChain] = {}
        for leg in setup.legs:
            if leg.chain_id not in self.chains:
                self.chains[leg.chain_id] = UtxoChain(leg.chain_id)
        contract_mode = "sha256" if setup.variant == "classic" else "poseidon"
        self.contract = ContractChain(CONTRACT_CHAIN_ID, hash_mode=contract_mode)

        key_rng = rng.child("keys")
        self.alice_refund_keys: List[KeyPair] = []
        shared: Dict[str, KeyPair] = {}
        for leg in setup.legs:
            if setup.distinct_refund_keys:
                self.alice_refund_keys.append(keygen(key_rng))
            else:
                if leg.chain_id not in shared:
                    shared[leg.chain_id] = keygen(key_rng)
                self.alice_refund_keys.append(shared[leg.chain_id])
        self.bob_leg_keys: List[KeyPair] = [keygen(key_rng) for _ in setup.legs]
        self.alice_token_key = keygen(key_rng)
        self.bob_token_key = keygen(key_rng)

        if setup.variant == "classic":
            self.secret_bytes = rng.child("secret").next_bytes(32)
            self.commitment = sha256(self.secret_bytes)
            self.instance = None
            self.proof_bytes = b""
        else:
            self.secret_x = rng.child("secret").next_scalar()
            instance, witness, _ = zk.generate_witness(self.secret_x)
            proving, self.verifying_params = zk.setup(ZK_SETUP_SEED)
            self.instance = instance
            self.commitment = instance.commitment
            self.proof_bytes = zk.prove(proving, instance, witness).to_bytes()
        if "tamper-proof" in setup.faults and self.proof_bytes:
            mutated = bytearray(self.proof_bytes)
            mutated[-1] ^= 0x01
            self.proof_bytes = bytes(mutated)

        self.leaves: List[ScriptLeaf] = []
        for index, leg in enumerate(setup.legs):
            refund_pk = self.alice_refund_keys[index].pk
            if "wrong-leaf" in setup.faults:
                refund_pk = generator_mul(
                    DeterministicRng(seed, "attacker").next_scalar()
                )
            self.leaves.append(ScriptLeaf(refund_pk, leg.locktime))
        self.escrows: List[Optional[EscrowKeySet]] = [None] * len(setup.legs)

        # genesis funding
        self.funding_outpoints = []
        for index, leg in enumerate(setup.legs):
            outpoint = self.chains[leg.chain_id].grant(
                leg.amount, self.alice_refund_keys[index].pk
            )
            self.funding_outpoints.append(outpoint)
        self.contract.grant(self.bob_token_key.pk, setup.contract_amount)

        self.phase = SwapPhase.INIT
        self.funded: List[Optional[str]] = [None] * len(setup.legs)  # txids
        self.announce_payload: Optional[bytes] = None
        self.announce_accepted = False
        self.abort_reason: Optional[str] = None
        self.contract_id: Optional[str] = None
        self.claim_height: Optional[int] = None
        self.sweep_broadcast_heights: List[Optional[int]] = [None] * len(setup.legs)
        self.swept: List[bool] = [False] * len(setup.legs)
        self.refunded_leg: List[bool] = [False] * len(setup.legs)
        self.contract_refunded = False
        self.messages: List[dict] = []
        self.schedule_log: List[dict] = []
        self.liveness_failures: List[str] = []
        self.initial_balances = self._balances()

    # -- balance bookkeeping ---------------------------------------------------

    def _party_keys(self, party: str) -> Dict[str, List[Point]]:
        keys: Dict[str, List[Point]] = {cid: [] for cid in self.chains}
        if party == "alice":
            for index, leg in enumerate(self.setup.legs):
                keys[leg.chain_id].append(self.alice_refund_keys[index].pk)
        else:
            for index, leg in enumerate(self.setup.legs):
                keys[leg.chain_id].append(self.bob_leg_keys[index].pk)
        return keys

    def _balances(self) -> Dict[str, Dict[str, int]]:
        out: Dict[str, Dict[str, int]] = {}
        for party in ("alice", "bob"):
            chains_balance = {}
            for chain_id, keys in self._party_keys(party).items():
                chain = self.chains[chain_id]
                chains_balance[chain_id] = sum(
                    chain.balance_of(pk) for pk in dict.fromkeys(keys)
                )
            token_key = self.alice_token_key if party == "alice" else self.bob_token_key
            chains_balance[CONTRACT_CHAIN_ID] = self.contract.balance_of(token_key.pk)
            out[party] = chains_balance
        return out

    def value_deltas(self) -> Dict[str, Fraction]:
        """Deal-unit deltas: each chain's swap total is one unit, the token
        side is worth as many units as there are UTXO chains in the deal."""
        final = self._balances()
        chain_totals: Dict[str, int] = {}
        for leg in self.setup.legs:
            chain_totals[leg.chain_id] = chain_totals.get(leg.chain_id, 0) + leg.amount
        n_chains = len(chain_totals)
        deltas = {}
        for party in ("alice", "bob"):
            total = Fraction(0)
            for chain_id, amount in chain_totals.items():
                diff = final[party][chain_id] - self.initial_balances[party][chain_id]
                total += Fraction(diff, amount)
            diff = (
                final[party][CONTRACT_CHAIN_ID]
                - self.initial_balances[party][CONTRACT_CHAIN_ID]
            )
            total += Fraction(diff * n_chains, self.setup.contract_amount)
            deltas[party] = total
        return deltas

    # -- protocol actions --------------------------------------------------------

    def fund(self) -> None:
        """Initiator pays every leg's escrow output (classic: HTLC output)."""
        if any(txid is not None for txid in self.funded):
            raise ValueError("already funded")
        for index, leg in enumerate(self.setup.legs):
            chain = self.chains[leg.chain_id]
            if self.setup.variant == "classic":
                tx = self._classic_fund_tx(index)
            else:
                escrow = derive_escrow_pk(
                    generator_mul(self.secret_x),
                    self.bob_leg_keys[index].pk,
                    self.leaves[index],
                )
                self.escrows[index] = escrow
                tx = chain.spend_key_path(
                    self.funding_outpoints[index],
                    escrow.escrow_pk,
                    self.alice_refund_keys[index].sk,
                    self.rng_alice,
                    dest_leaf_commitment=leaf_commitment(self.leaves[index]),
                )
            self.funded[index] = chain.broadcast(tx)
        self.phase = SwapPhase.FUNDED

    def _classic_fund_tx(self, index: int) -> UtxoTransaction:
        leg = self.setup.legs[index]
        htlc = HtlcScript(
            self.commitment,
            self.bob_leg_keys[index].pk,
            self.alice_refund_keys[index].pk,
            leg.locktime,
        )
        skeleton = UtxoTransaction(
            (TxInput(self.funding_outpoints[index], KeyPathWitness(b"\x00" * 65)),),
            (TxOutput(leg.amount, htlc=htlc),),
        )
        sig = sign(self.alice_refund_keys[index].sk, skeleton.digest(), self.rng_alice)
        return UtxoTransaction(
            (TxInput(self.funding_outpoints[index], KeyPathWitness(sig.to_bytes())),),
            skeleton.outputs,
        )

    def announce(self) -> Tuple[bool, str]:
        """Initiator's message plus the responder's full verification."""
        if not all(self.funded):
            raise ValueError("announce before funding")
        if self.announce_payload is not None:
            raise ValueError("already announced")
        if self.setup.variant == "classic":
            payload = json.dumps(
                {
                    "hash_value": self.commitment.hex(),
                    "funding_txids": list(self.funded),
                },
                sort_keys=True,
            ).encode()
            accepted, reason = self._classic_verify_announce()
        else:
            record = AnnounceRecord(
                generator_mul(self.secret_x),
                self.commitment,
                self.proof_bytes,
                [
                    AnnounceLeg(
                        leg.chain_id,
                        self.escrows[index].escrow_pk,
                        self.leaves[index],
                        self.funded[index],
                        leg.amount,
                    )
                    for index, leg in enumerate(self.setup.legs)
                ],
            )
            payload = encode_announce(record)
            view = ResponderView(
                bob_leg_pks=[kp.pk for kp in self.bob_leg_keys],
                expected_refund_pks=[kp.pk for kp in self.alice_refund_keys],
                expected_amounts=[leg.amount for leg in self.setup.legs],
                contract_locktime=self.setup.contract_locktime,
                reaction_blocks=self.setup.reaction_blocks,
                verifying_params=self.verifying_params,
                chains=self.chains,
            )
            accepted, reason = responder_verify_announce(payload, view)
        self.announce_payload = payload
        self.announce_accepted = accepted
        self.messages.append(
            {
                "from": "alice",
                "to": "bob",
                "kind": "announce",
                "payload": self._announce_json(payload),
            }
        )
        self.messages.append(
            {
                "from": "bob",
                "to": "alice",
                "kind": "ack" if accepted else "abort",
                "reason": reason,
            }
        )
        if accepted:
            self.phase = SwapPhase.ANNOUNCED
        else:
            self.phase = SwapPhase.ABORTED
            self.abort_reason = reason
        return accepted, reason

    def _announce_json(self, payload: bytes) -> dict:
        if self.setup.variant == "classic":
            return json.loads(payload.decode())
        return announce_to_json(decode_announce(payload))

    def _classic_verify_announce(self) -> Tuple[bool, str]:
        for index, leg in enumerate(self.setup.legs):
            chain = self.chains[leg.chain_id]
            if not chain.is_confirmed(self.funded[index]):
                return False, "funding"
        min_lt = min(leg.locktime for leg in self.setup.legs)
        if self.setup.contract_locktime + self.setup.reaction_blocks > min_lt:
            return False, "deadlines"
        return True, "ok"

    def lock(self) -> str:
        if not self.announce_accepted:
            raise ValueError("responder never accepted the announcement")
        if self.contract_id is not None:
            raise ValueError("already locked")
        self.contract_id = self.contract.lock(
            self.commitment,
            self.setup.contract_amount,
            self.alice_token_key.pk,
            self.bob_token_key.pk,
            self.setup.contract_locktime,
        )
        self.phase = SwapPhase.LOCKED
        return self.contract_id

    def claim(self) -> dict:
        if self.contract_id is None:
            raise ValueError("nothing locked to claim")
        if self.setup.variant == "classic":
            payload = self.secret_bytes
        else:
            payload = zk.scalar_to_limbs(self.secret_x)
        sig = sign(
            self.alice_token_key.sk,
            claim_digest(self.contract_id, payload),
            self.rng_alice,
        )
        event = self.contract.claim(self.contract_id, payload, sig.to_bytes())
        self.claim_height = event["height"]
        self.phase = SwapPhase.CLAIMED
        return event

    def extract_revealed_secret(self) -> int:
        """Responder-side: read x back out of the contract's claim event."""
        for event in self.contract.events:
            if event["kind"] == "claim" and event["contract_id"] == self.contract_id:
                blob = bytes.fromhex(event["revealed"])
                limbs = tuple(
                    int.from_bytes(blob[8 * i : 8 * (i + 1)], "big") for i in range(4)
                )
                return zk.limbs_to_int(limbs)
        raise ValueError("no claim event on the contract chain")

    def sweep(self, index: int) -> str:
        if self.setup.faults and "withhold-sweep" in self.setup.faults and index > 0:
            self.liveness_failures.append(f"sweep withheld on leg {index}")
            raise ValueError("sweep withheld by fault injection")
        leg = self.setup.legs[index]
        chain = self.chains[leg.chain_id]
        if self.setup.variant == "classic":
            tx = self._classic_sweep_tx(index)
        else:
            x = self.extract_revealed_secret()
            sk_esc = derive_escrow_sk(
                x, self.bob_leg_keys[index].sk, self.leaves[index]
            )
            if generator_mul(sk_esc) != self.escrows[index].escrow_pk:
                raise ValueError("derived escrow secret does not match output key")
            outpoint = chain.find_utxo(self.escrows[index].escrow_pk)
            if outpoint is None:
                raise TxRejected("double-spend", "escrow output already spent")
            tx = chain.spend_key_path(
                outpoint, self.bob_leg_keys[index].pk, sk_esc, self.rng_bob
            )
        txid = chain.broadcast(tx)
        self.sweep_broadcast_heights[index] = chain.height
        self.swept[index] = True
        return txid

    def _classic_sweep_tx(self, index: int) -> UtxoTransaction:
        leg = self.setup.legs[index]
        chain = self.chains[leg.chain_id]
        preimage = self.secret_preimage_from_contract()
        outpoint = None
        for op, txout in chain.utxos.items():
            if txout.htlc is not None and txout.htlc.hash_value == self.commitment:
                outpoint = op
                break
        if outpoint is None:
            raise TxRejected("double-spend", "HTLC output already spent")
        skeleton = UtxoTransaction(
            (TxInput(outpoint, HtlcClaimWitness(preimage, b"\x00" * 65)),),
            (TxOutput(leg.amount, self.bob_leg_keys[index].pk),),
        )
        sig = sign(self.bob_leg_keys[index].sk, skeleton.digest(), self.rng_bob)
        return UtxoTransaction(
            (TxInput(outpoint, HtlcClaimWitness(preimage, sig.to_bytes())),),
            skeleton.outputs,
        )

    def secret_preimage_from_contract(self) -> bytes:
        for event in self.contract.events:
            if event["kind"] == "claim" and event["contract_id"] == self.contract_id:
                return bytes.fromhex(event["revealed"])
        raise ValueError("no claim event on the contract chain")

    def refund_utxo(self, index: int) -> str:
        leg = self.setup.legs[index]
        chain = self.chains[leg.chain_id]
        if self.setup.variant == "classic":
            tx = self._classic_refund_tx(index)
        else:
            outpoint = chain.find_utxo(self.escrows[index].escrow_pk)
            if outpoint is None:
                raise TxRejected("double-spend", "escrow output already spent")
            tx = chain.spend_script_path(
                outpoint,
                self.leaves[index],
                self.alice_refund_keys[index].sk,
                chain.height,
                self.rng_alice,
            )
        txid = chain.broadcast(tx)
        self.refunded_leg[index] = True
        return txid

    def _classic_refund_tx(self, index: int) -> UtxoTransaction:
        leg = self.setup.legs[index]
        chain = self.chains[leg.chain_id]
        outpoint = None
        for op, txout in chain.utxos.items():
            if txout.htlc is not None and txout.htlc.hash_value == self.commitment:
                outpoint = op
                break
        if outpoint is None:
            raise TxRejected("double-spend", "HTLC output already spent")
        if chain.height < leg.locktime:
            raise TxRejected("premature-spend", f"locktime {leg.locktime}")
        skeleton = UtxoTransaction(
            (TxInput(outpoint, HtlcRefundWitness(b"\x00" * 65)),),
            (TxOutput(leg.amount, self.alice_refund_keys[index].pk),),
        )
        sig = sign(self.alice_refund_keys[index].sk, skeleton.digest(), self.rng_alice)
        return UtxoTransaction(
            (TxInput(outpoint, HtlcRefundWitness(sig.to_bytes())),), skeleton.outputs
        )

    def refund_contract(self) -> dict:
        if self.contract_id is None:
            raise ValueError("nothing locked to refund")
        sig = sign(
            self.bob_token_key.sk, refund_digest(self.contract_id), self.rng_bob
        )
        event = self.contract.refund(self.contract_id, sig.to_bytes())
        self.contract_refunded = True
        return event

    def tick(self, chain_id: Optional[str] = None) -> None:
        """Advance clocks; by default all chains move one block in lockstep."""
        if chain_id is None:
            for chain in self.chains.values():
                chain.mine_blocks(1)
            self.contract.advance_blocks(1)
        elif chain_id == CONTRACT_CHAIN_ID:
            self.contract.advance_blocks(1)
        else:
            self.chains[chain_id].mine_blocks(1)

    # -- scheduling ---------------------------------------------------------------

    def perform(self, token: str) -> Tuple[bool, str]:
        """Execute one schedule token; chain rejections become log entries."""
        action, _, arg = token.partition(":")
        try:
            if action == "tick":
                count = 1
                chain_id = None
                if arg:
                    chain_id = arg if not arg.isdigit() else None
                    count = int(arg) if arg.isdigit() else 1
                for _ in range(count):
                    self.tick(chain_id)
                detail = "ok"
            elif action == "fund":
                self.fund()
                detail = ",".join(self.funded)
            elif action == "announce":
                accepted, reason = self.announce()
                detail = reason
                if not accepted:
                    self._log_action(token, False, reason)
                    return False, reason
            elif action == "lock":
                detail = self.lock()
            elif action == "claim":
                detail = str(self.claim()["height"])
            elif action == "sweep":
                indices = [int(arg)] if arg else list(range(len(self.setup.legs)))
                detail = ",".join(self.sweep(i) for i in indices)
            elif action == "refund_utxo":
                indices = [int(arg)] if arg else list(range(len(self.setup.legs)))
                detail = ",".join(self.refund_utxo(i) for i in indices)
            elif action == "refund_contract":
                detail = str(self.refund_contract()["height"])
            elif action == "finish":
                self.finish_recovery()
                detail = "ok"
            else:
                raise ValueError(f"unknown schedule action {token!r}")
        except (TxRejected, ContractError) as exc:
            self._log_action(token, False, exc.reason)
            return False, exc.reason
        except ValueError as exc:
            self._log_action(token, False, str(exc))
            return False, str(exc)
        self._log_action(token, True, detail)
        return True, detail

    def _log_action(self, token: str, ok: bool, detail: str) -> None:
        self.schedule_log.append({"action": token, "ok": ok, "detail": detail})

    def run(self, schedule: Sequence[str]):
        for token in schedule:
            self.perform(token)
        if not any(rec["action"] == "finish" for rec in self.schedule_log):
            self.perform("finish")
        return self.outcome()

    # -- recovery epilogue -----------------------------------------------------------

    def _sweepable(self, index: int) -> bool:
        if self.swept[index] or self.setup.variant == "classic":
            return False
        if self.claim_height is None or self.escrows[index] is None:
            return False
        chain = self.chains[self.setup.legs[index].chain_id]
        return chain.find_utxo(self.escrows[index].escrow_pk) is not None

    def _classic_sweepable(self, index: int) -> bool:
        if self.swept[index] or self.setup.variant != "classic":
            return False
        if self.claim_height is None:
            return False
        chain = self.chains[self.setup.legs[index].chain_id]
        return any(
            t.htlc is not None and t.htlc.hash_value == self.commitment
            for t in chain.utxos.values()
        )

    def _refundable(self, index: int) -> bool:
        if self.refunded_leg[index] or self.swept[index]:
            return False
        chain = self.chains[self.setup.legs[index].chain_id]
        if chain.height < self.setup.legs[index].locktime:
            return False
        if self.setup.variant == "classic":
            return any(
                t.htlc is not None and t.htlc.hash_value == self.commitment
                for t in chain.utxos.values()
            )
        if self.escrows[index] is None:
            return False
        return chain.find_utxo(self.escrows[index].escrow_pk) is not None

    def finish_recovery(self) -> None:
        """Honest parties execute every still-available safety action.

        The responder sweeps first (he is the one racing a deadline), then
        refunds run; the loop ticks until every locktime has passed and
        nothing is left pending.  Withheld-sweep fault injections keep
        their legs unswept so liveness failures stay observable.
        """
        max_locktime = max(
            [leg.locktime for leg in self.setup.legs] + [self.setup.contract_locktime]
        )
        for _ in range(max_locktime + self.setup.reaction_blocks + 4):
            progressed = False
            for index in range(len(self.setup.legs)):
                withheld = (
                    "withhold-sweep" in self.setup.faults and index > 0
                )
                if withheld:
                    continue
                if self._sweepable(index) or self._classic_sweepable(index):
                    try:
                        self.sweep(index)
                        progressed = True
                    except (TxRejected, ContractError, ValueError):
                        pass
            for index in range(len(self.setup.legs)):
                if self._refundable(index):
                    try:
                        self.refund_utxo(index)
                        progressed = True
                    except (TxRejected, ContractError, ValueError):
                        pass
            if (
                self.contract_id is not None
                and not self.contract_refunded
                and self.contract.contracts[self.contract_id].status
                is ContractStatus.OPEN
                and self.contract.height >= self.setup.contract_locktime
            ):
                try:
                    self.refund_contract()
                    progressed = True
                except (ContractError, ValueError):
                    pass
            pending_mempool = any(c.mempool for c in self.chains.values())
            heights_done = all(
                c.height > max_locktime + 1 for c in self.chains.values()
            ) and self.contract.height > max_locktime + 1
            if heights_done and not pending_mempool and not progressed:
                break
            self.tick()
        self._classify()

    def _classify(self) -> None:
        if self.phase is SwapPhase.ABORTED:
            return
        if self.claim_height is not None and all(
            s or r for s, r in zip(self.swept, self.refunded_leg)
        ):
            self.phase = SwapPhase.COMPLETED

    # -- outcome ------------------------------------------------------------------

    def settled_branches(self) -> dict:
        legs = []
        for index in range(len(self.setup.legs)):
            if self.swept[index]:
                legs.append("swept")
            elif self.refunded_leg[index]:
                legs.append("refunded")
            else:
                legs.append("open")
        if self.contract_id is None:
            contract = "never-locked"
        else:
            contract = self.contract.contracts[self.contract_id].status.value
        return {"legs": legs, "contract": contract}

    def check_invariants(self) -> Dict[str, bool]:
        checks = {}
        checks["contract_conservation"] = self.contract.conservation_holds()
        for chain_id, chain in self.chains.items():
            checks[f"replay_{chain_id}"] = chain.replay_check()
        settled = self.settled_branches()
        checks["single_settlement"] = all(
            not (s and r) for s, r in zip(self.swept, self.refunded_leg)
        ) and settled["contract"] in ("never-locked", "open", "claimed", "refunded")
        commitments = set()
        for message in self.messages:
            if message["kind"] == "announce":
                payload = message["payload"]
                commitments.add(payload.get("commitment") or payload.get("hash_value"))
        checks["one_secret_commitment"] = len(commitments) <= 1
        deltas = self.value_deltas()
        faulted = bool(self.liveness_failures)
        checks["alice_value_preserved"] = deltas["alice"] >= 0
        checks["bob_value_preserved"] = faulted or deltas["bob"] >= 0
        return checks

    def outcome(self) -> dict:
        deltas = self.value_deltas()
        transcript = {
            "schema_version": 1,
            "variant": self.setup.variant,
            "seed": self.seed.hex(),
            "params": {
                "legs": [
                    {
                        "chain_id": leg.chain_id,
                        "amount": leg.amount,
                        "locktime": leg.locktime,
                    }
                    for leg in self.setup.legs
                ],
                "contract_amount": self.setup.contract_amount,
                "contract_locktime": self.setup.contract_locktime,
                "reaction_blocks": self.setup.reaction_blocks,
                "distinct_refund_keys": self.setup.distinct_refund_keys,
                "faults": list(self.setup.faults),
            },
            "schedule": self.schedule_log,
            "messages": self.messages,
            "chains": {
                chain_id: {
                    "type": "utxo",
                    "height": chain.height,
                    "log": chain.export_log(),
                    "rejections": chain.rejections,
                }
                for chain_id, chain in sorted(self.chains.items())
            },
            "phase": self.phase.value,
            "abort_reason": self.abort_reason,
            "settled": self.settled_branches(),
            "initial_balances": self.initial_balances,
            "final_balances": self._balances(),
            "value_deltas": {k: str(v) for k, v in sorted(deltas.items())},
            "liveness_failures": self.liveness_failures,
            "invariants": self.check_invariants(),
        }
        transcript["chains"][CONTRACT_CHAIN_ID] = {
            "type": "contract",
            "height": self.contract.height,
            "events": self.contract.export_events(),
        }
        return transcript


# -- variant entry points ---------------------------------------------------------


def run_single_swap(setup: SwapSetup, schedule: Sequence[str], seed: bytes) -> dict:
    assert setup.variant == "single"
    return SwapWorld(setup, seed).run(schedule)


def run_multiple_swap(setup: SwapSetup, schedule: Sequence[str], seed: bytes) -> dict:
    assert setup.variant == "multiple"
    return SwapWorld(setup, seed).run(schedule)


def run_multichain_swap(setup: SwapSetup, schedule: Sequence[str], seed: bytes) -> dict:
    assert setup.variant == "multichain"
    return SwapWorld(setup, seed).run(schedule)


def run_classic_swap(setup: SwapSetup, schedule: Sequence[str], seed: bytes) -> dict:
    assert setup.variant == "classic"
    return SwapWorld(setup, seed).run(schedule)
