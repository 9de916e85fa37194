"""Pluggable prove/verify backends for the swap statement.

The protocol engine only consumes the accept/reject contract, so backends
are swappable behind ``setup``/``prove``/``verify``.  Two ship here:

* ``ConstraintOracleBackend`` -- the default.  A proof is the witness
  itself plus a SHA256 binding commitment; the verifier replays witness
  expansion and checks the full constraint system.  Sound and complete,
  and deliberately NOT zero-knowledge: the witness travels inside the
  proof.  Fine for protocol simulation, useless for privacy.  Transcripts
  that embed these proof bytes therefore reveal x to transcript readers
  (not to the simulated chains, which never see announce payloads).

* ``PairingBackendStub`` -- the integration point for a real pairing-based
  SNARK.  It reserves a backend id and the parameter plumbing but raises
  ``BackendUnavailable``; wire an actual Groth16-style prover here to get
  zero-knowledge proofs behind the same interface.

Setup is a deterministic function of a seed: desk-scale reproducibility
instead of a trusted ceremony.
"""

import hashlib
import struct
from dataclasses import dataclass
from typing import Dict, Tuple

from .circuit import (
    StatementInstance,
    StatementWitness,
    assignment_for,
    build_circuit,
)

CONSTRAINT_ORACLE_ID = b"CON1"
PAIRING_STUB_ID = b"GRO1"


class BackendUnavailable(RuntimeError):
    pass


@dataclass(frozen=True)
class Proof:
    backend_id: bytes
    payload: bytes

    def to_bytes(self) -> bytes:
        return self.backend_id + struct.pack(">I", len(self.payload)) + self.payload

    @classmethod
    def from_bytes(cls, data: bytes) -> "Proof":
        if len(data) < 8:
            raise ValueError("proof too short")
        backend_id = data[:4]
        (length,) = struct.unpack(">I", data[4:8])
        payload = data[8:]
        if len(payload) != length:
            raise ValueError("proof length prefix mismatch")
        return cls(backend_id, payload)


@dataclass(frozen=True)
class ProvingParams:
    backend_id: bytes
    digest: bytes


@dataclass(frozen=True)
class VerifyingParams:
    backend_id: bytes
    digest: bytes


def _circuit_digest(seed: bytes) -> bytes:
    cs = build_circuit()
    meta = f"tapswap-statement-v1:{cs.num_constraints}:{cs.num_vars}:{cs.num_public}"
    return hashlib.sha256(meta.encode() + b"|" + seed).digest()


class ConstraintOracleBackend:
    backend_id = CONSTRAINT_ORACLE_ID

    def __init__(self):
        self._verify_cache: Dict[bytes, bool] = {}

    def setup(self, seed: bytes) -> Tuple[ProvingParams, VerifyingParams]:
        digest = _circuit_digest(seed)
        return (
            ProvingParams(self.backend_id, digest),
            VerifyingParams(self.backend_id, digest),
        )

    def prove(
        self, params: ProvingParams, instance: StatementInstance, witness: StatementWitness
    ) -> Proof:
        if params.backend_id != self.backend_id:
            raise ValueError("params belong to a different backend")
        assignment = assignment_for(instance, witness)
        if not build_circuit().satisfied(assignment):
            raise ValueError("witness does not satisfy the statement circuit")
        witness_bytes = witness.to_bytes()
        binding = self._binding(params.digest, instance, witness_bytes)
        return Proof(self.backend_id, witness_bytes + binding)

    def verify(
        self, params: VerifyingParams, instance: StatementInstance, proof: Proof
    ) -> bool:
        if proof.backend_id != self.backend_id or params.backend_id != self.backend_id:
            return False
        try:
            instance.validate()
        except ValueError:
            return False
        cache_key = hashlib.sha256(
            params.digest + instance.to_bytes() + proof.payload
        ).digest()
        cached = self._verify_cache.get(cache_key)
        if cached is not None:
            return cached
        result = self._verify_uncached(params, instance, proof)
        if len(self._verify_cache) > 4096:
            self._verify_cache.clear()
        self._verify_cache[cache_key] = result
        return result

    def _verify_uncached(
        self, params: VerifyingParams, instance: StatementInstance, proof: Proof
    ) -> bool:
        payload = proof.payload
        if len(payload) != 128 + 32:
            return False
        witness_bytes, binding = payload[:128], payload[128:]
        if binding != self._binding(params.digest, instance, witness_bytes):
            return False
        try:
            witness = StatementWitness.from_bytes(witness_bytes)
            assignment = assignment_for(instance, witness)
        except (ValueError, ZeroDivisionError):
            return False
        return build_circuit().satisfied(assignment)

    @staticmethod
    def _binding(digest: bytes, instance: StatementInstance, witness_bytes: bytes) -> bytes:
        return hashlib.sha256(
            b"tapswap-oracle-binding|" + digest + instance.to_bytes() + witness_bytes
        ).digest()


class PairingBackendStub:
    """Reserved slot for a real SNARK backend; everything raises."""

    backend_id = PAIRING_STUB_ID

    def setup(self, seed: bytes):
        raise BackendUnavailable(
            "pairing backend not bundled; plug a Groth16-style prover behind this id"
        )

    def prove(self, params, instance, witness):
        raise BackendUnavailable("pairing backend not bundled")

    def verify(self, params, instance, proof) -> bool:
        raise BackendUnavailable("pairing backend not bundled")


_REGISTRY = {
    CONSTRAINT_ORACLE_ID: ConstraintOracleBackend(),
    PAIRING_STUB_ID: PairingBackendStub(),
}


def get_backend(backend_id: bytes):
    backend = _REGISTRY.get(backend_id)
    if backend is None:
        raise KeyError(f"unknown zk backend {backend_id!r}")
    return backend


def default_backend() -> ConstraintOracleBackend:
    return _REGISTRY[CONSTRAINT_ORACLE_ID]


def setup(seed: bytes) -> Tuple[ProvingParams, VerifyingParams]:
    return default_backend().setup(seed)


def prove(
    params: ProvingParams, instance: StatementInstance, witness: StatementWitness
) -> Proof:
    return get_backend(params.backend_id).prove(params, instance, witness)


def verify_bytes(
    params: VerifyingParams, instance: StatementInstance, proof_bytes: bytes
) -> bool:
    """Wire-format verification: malformed bytes or unknown backends reject."""
    try:
        proof = Proof.from_bytes(proof_bytes)
    except ValueError:
        return False
    backend = _REGISTRY.get(proof.backend_id)
    if backend is None or isinstance(backend, PairingBackendStub):
        return False
    return backend.verify(params, instance, proof)
