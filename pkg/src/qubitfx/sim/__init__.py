"""Fixed-capacity statevector simulator (up to 4 qubits, 14 slices)."""
from .circuit import (
    CONTROL,
    Circuit,
    GateSlot,
    IDENTITY,
    MAX_SLICES,
    Slice,
    SlotKind,
    SWAP_MARK,
    format_circuit,
    gate,
    parse_circuit,
    parse_slot,
    rx,
)
from .entangler import entangler_circuit, entangler_state
from .errors import CapacityError, CircuitError
from .gates import MAX_QUBITS, rx_matrix, tensor_product
from .sampling import (
    DEFAULT_RESOLUTION,
    EntanglerByteSource,
    OutcomeDistribution,
    build_distribution,
    pack_outcomes,
    sample,
)
from .simulate import MatrixMeter, evolve, slice_operator
from .state import Statevector, format_statevector, probabilities

__all__ = [
    "CONTROL",
    "CapacityError",
    "Circuit",
    "CircuitError",
    "DEFAULT_RESOLUTION",
    "EntanglerByteSource",
    "GateSlot",
    "IDENTITY",
    "MAX_QUBITS",
    "MAX_SLICES",
    "MatrixMeter",
    "OutcomeDistribution",
    "SWAP_MARK",
    "Slice",
    "SlotKind",
    "Statevector",
    "build_distribution",
    "entangler_circuit",
    "entangler_state",
    "evolve",
    "format_circuit",
    "format_statevector",
    "gate",
    "pack_outcomes",
    "parse_circuit",
    "parse_slot",
    "probabilities",
    "rx",
    "rx_matrix",
    "sample",
    "slice_operator",
    "tensor_product",
]
