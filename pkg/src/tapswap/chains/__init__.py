"""In-process chain simulators: a taproot-style UTXO chain and an
account/contract chain.  Clocks are independent integers; only the
scenario scheduler couples them."""

from .contract import ContractChain, ContractError, ContractStatus, HtlcContract
from .utxo import (
    HtlcClaimWitness,
    HtlcRefundWitness,
    HtlcScript,
    KeyPathWitness,
    ScriptPathWitness,
    TxInput,
    TxOutput,
    TxRejected,
    UtxoChain,
    UtxoTransaction,
)

__all__ = [
    "ContractChain",
    "ContractError",
    "ContractStatus",
    "HtlcContract",
    "HtlcClaimWitness",
    "HtlcRefundWitness",
    "HtlcScript",
    "KeyPathWitness",
    "ScriptPathWitness",
    "TxInput",
    "TxOutput",
    "TxRejected",
    "UtxoChain",
    "UtxoTransaction",
]
