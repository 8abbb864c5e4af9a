"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: InputError (and
subclasses) exit 2, TheoremViolation and failed verifications exit 1.
"""


class InputError(ValueError):
    """Caller handed us something malformed or out of contract."""


class CapacityError(InputError):
    """Input exceeds a documented enumeration cap."""


class K4FoundError(InputError):
    """An operation requiring a K4-free graph was given one containing K4.

    Carries the violating 4-set in ``witness``.
    """

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"graph contains K4 on vertices {self.witness}")


class AssumptionError(InputError):
    """A caller-supplied assumption (e.g. K4-free reduced graph) failed."""


class TheoremViolation(RuntimeError):
    """A guarantee that must always hold was observed to fail.

    This must never fire on correct code; it exists so a bug cannot
    silently produce an invalid certificate.
    """
