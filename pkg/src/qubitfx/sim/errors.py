"""Error types raised by the simulator core."""


class CapacityError(ValueError):
    """An operation would exceed the simulator's fixed-size budget."""


class CircuitError(ValueError):
    """A circuit, slice, or statevector failed validation."""
