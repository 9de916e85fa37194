"""Statement circuit, witness generation and pluggable proof backends."""

from .backend import (
    BackendUnavailable,
    ConstraintOracleBackend,
    PairingBackendStub,
    Proof,
    ProvingParams,
    VerifyingParams,
    default_backend,
    get_backend,
    prove,
    setup,
    verify_bytes,
)
from .circuit import (
    StatementInstance,
    StatementWitness,
    assignment_for,
    build_circuit,
    circuit_report,
    generate_witness,
    instance_for_secret,
    limbs_to_int,
    scalar_to_limbs,
)
from .r1cs import ConstraintSystem

__all__ = [
    "BackendUnavailable",
    "ConstraintOracleBackend",
    "ConstraintSystem",
    "PairingBackendStub",
    "Proof",
    "ProvingParams",
    "StatementInstance",
    "StatementWitness",
    "VerifyingParams",
    "assignment_for",
    "build_circuit",
    "circuit_report",
    "default_backend",
    "generate_witness",
    "get_backend",
    "instance_for_secret",
    "limbs_to_int",
    "prove",
    "scalar_to_limbs",
    "setup",
    "verify_bytes",
]
