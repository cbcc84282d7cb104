"""Exception types shared across the package."""


class RingMismatchError(ValueError):
    """Operands belong to cyclotomic rings with different primes."""


class SizeLimitError(RuntimeError):
    """A computation exceeded its configured size cap.

    Raised by the iteration routines as a resource guard; coefficient
    heights grow roughly like the p-th power per step, so hitting the
    cap is expected behaviour for large inputs, not a bug.
    """
