"""Account-based contract chain hosting the hashed-timelock contract.

Claims require the hash preimage plus the beneficiary's signature, so an
observer who sees x in the mempool still cannot steal the claim.  Refunds
require the refund key's signature and the locktime.  Boundary convention,
fixed and documented: claims are valid strictly before ``lt_refund``,
refunds at or after it.

The hash check defaults to Poseidon over the secret's four 64-bit limbs
(matching the zk statement); ``hash_mode="sha256"`` swaps in a plain
byte-preimage check for classic-baseline comparison scenarios.

Value conservation holds per transition: balances plus open contract
amounts never change except through grants.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..curve import Point, serialize_point
from ..hashing import SNARK_PRIME, poseidon_hash, sha256
from ..schnorr import verify_bytes


class ContractError(Exception):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class ContractStatus(Enum):
    OPEN = "open"
    CLAIMED = "claimed"
    REFUNDED = "refunded"


Commitment = Union[int, bytes]  # Poseidon field element or SHA256 digest
ClaimPayload = Union[Tuple[int, ...], bytes]  # secret limbs or raw preimage


def claim_digest(contract_id: str, payload: ClaimPayload) -> bytes:
    """What the beneficiary signs; binds the signature to this exact claim."""
    if isinstance(payload, bytes):
        body = payload
    else:
        body = b"".join(v.to_bytes(8, "big") for v in payload)
    return sha256(contract_id.encode() + b"|claim|" + body)


def refund_digest(contract_id: str) -> bytes:
    return sha256(contract_id.encode() + b"|refund|")


@dataclass
class HtlcContract:
    contract_id: str
    commitment: Commitment
    amount: int
    beneficiary_pk: Point
    refund_pk: Point
    lt_refund: int
    status: ContractStatus = ContractStatus.OPEN
    revealed: Optional[ClaimPayload] = None


class ContractChain:
    def __init__(self, chain_id: str = "contract", hash_mode: str = "poseidon"):
        if hash_mode not in ("poseidon", "sha256"):
            raise ValueError("hash_mode must be 'poseidon' or 'sha256'")
        self.chain_id = chain_id
        self.hash_mode = hash_mode
        self.height = 0
        self.balances: Dict[bytes, int] = {}
        self.contracts: Dict[str, HtlcContract] = {}
        self.events: List[dict] = []
        self._total_granted = 0

    # -- balances -------------------------------------------------------------

    def grant(self, pk: Point, amount: int) -> None:
        key = serialize_point(pk)
        self.balances[key] = self.balances.get(key, 0) + amount
        self._total_granted += amount

    def balance_of(self, pk: Point) -> int:
        return self.balances.get(serialize_point(pk), 0)

    def _debit(self, pk: Point, amount: int) -> None:
        key = serialize_point(pk)
        if self.balances.get(key, 0) < amount:
            raise ContractError("insufficient-balance")
        self.balances[key] -= amount

    def _credit(self, pk: Point, amount: int) -> None:
        key = serialize_point(pk)
        self.balances[key] = self.balances.get(key, 0) + amount

    # -- contract operations ----------------------------------------------------

    def lock(
        self,
        commitment: Commitment,
        amount: int,
        beneficiary_pk: Point,
        refund_pk: Point,
        lt_refund: int,
    ) -> str:
        """Open a contract, debiting the refund key's holder (the locker)."""
        self._check_commitment_domain(commitment)
        if amount <= 0:
            raise ContractError("invalid-amount")
        if lt_refund <= self.height:
            raise ContractError(
                "invalid-locktime", f"lt_refund {lt_refund} not past height {self.height}"
            )
        self._debit(refund_pk, amount)
        contract_id = sha256(
            f"{self.chain_id}/{len(self.events)}".encode()
            + self._commitment_bytes(commitment)
            + serialize_point(beneficiary_pk)
            + serialize_point(refund_pk)
        ).hex()[:32]
        self.contracts[contract_id] = HtlcContract(
            contract_id, commitment, amount, beneficiary_pk, refund_pk, lt_refund
        )
        self.events.append(
            {
                "height": self.height,
                "contract_id": contract_id,
                "kind": "lock",
                "commitment": self._commitment_bytes(commitment).hex(),
                "amount": amount,
                "beneficiary_pk": serialize_point(beneficiary_pk).hex(),
                "refund_pk": serialize_point(refund_pk).hex(),
                "lt_refund": lt_refund,
            }
        )
        return contract_id

    def claim(self, contract_id: str, payload: ClaimPayload, sig_bytes: bytes) -> dict:
        contract = self._open_contract(contract_id)
        if self.height >= contract.lt_refund:
            raise ContractError(
                "expired", f"claims close at height {contract.lt_refund}"
            )
        if not self._preimage_matches(contract.commitment, payload):
            raise ContractError("wrong-preimage")
        if not verify_bytes(
            contract.beneficiary_pk, claim_digest(contract_id, payload), sig_bytes
        ):
            raise ContractError("bad-signature", "claim must be signed by the beneficiary")
        contract.status = ContractStatus.CLAIMED
        contract.revealed = payload
        self._credit(contract.beneficiary_pk, contract.amount)
        event = {
            "height": self.height,
            "contract_id": contract_id,
            "kind": "claim",
            "revealed": self._payload_bytes(payload).hex(),
            "amount": contract.amount,
        }
        self.events.append(event)
        return event

    def refund(self, contract_id: str, sig_bytes: bytes) -> dict:
        contract = self._open_contract(contract_id)
        if self.height < contract.lt_refund:
            raise ContractError(
                "premature", f"refund opens at height {contract.lt_refund}"
            )
        if not verify_bytes(contract.refund_pk, refund_digest(contract_id), sig_bytes):
            raise ContractError("bad-signature", "refund must be signed by the refund key")
        contract.status = ContractStatus.REFUNDED
        self._credit(contract.refund_pk, contract.amount)
        event = {
            "height": self.height,
            "contract_id": contract_id,
            "kind": "refund",
            "amount": contract.amount,
        }
        self.events.append(event)
        return event

    def advance_blocks(self, n: int = 1) -> int:
        if n < 1:
            raise ValueError("must advance at least one block")
        self.height += n
        return self.height

    # -- helpers ---------------------------------------------------------------

    def _open_contract(self, contract_id: str) -> HtlcContract:
        contract = self.contracts.get(contract_id)
        if contract is None:
            raise ContractError("unknown-contract", contract_id)
        if contract.status is not ContractStatus.OPEN:
            raise ContractError("already-settled", contract.status.value)
        return contract

    def _check_commitment_domain(self, commitment: Commitment) -> None:
        if self.hash_mode == "poseidon":
            if not isinstance(commitment, int) or not 0 <= commitment < SNARK_PRIME:
                raise ContractError("invalid-commitment", "expected SNARK field element")
        else:
            if not isinstance(commitment, bytes) or len(commitment) != 32:
                raise ContractError("invalid-commitment", "expected 32-byte digest")

    def _commitment_bytes(self, commitment: Commitment) -> bytes:
        if isinstance(commitment, int):
            return commitment.to_bytes(32, "big")
        return commitment

    def _payload_bytes(self, payload: ClaimPayload) -> bytes:
        if isinstance(payload, bytes):
            return payload
        return b"".join(v.to_bytes(8, "big") for v in payload)

    def _preimage_matches(self, commitment: Commitment, payload: ClaimPayload) -> bool:
        if self.hash_mode == "poseidon":
            if not isinstance(payload, tuple) or not all(
                isinstance(v, int) and 0 <= v < SNARK_PRIME for v in payload
            ):
                return False
            return poseidon_hash(list(payload)) == commitment
        if not isinstance(payload, bytes):
            return False
        return sha256(payload) == commitment

    # -- inspection ------------------------------------------------------------

    def open_amount(self) -> int:
        return sum(
            c.amount
            for c in self.contracts.values()
            if c.status is ContractStatus.OPEN
        )

    def conservation_holds(self) -> bool:
        return sum(self.balances.values()) + self.open_amount() == self._total_granted

    def export_events(self) -> List[dict]:
        return [dict(e) for e in self.events]
