"""Exception types shared across the package, mapped to CLI exit codes."""


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class InfeasibleError(RuntimeError):
    """No feasible solution exists, e.g. an empty edge (CLI exit code 3)."""


class ResourceLimitError(RuntimeError):
    """A search budget was exhausted (CLI exit code 4).

    Carries the best incumbent found so far, when one exists.
    """

    def __init__(self, message, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent


class GenerationError(RuntimeError):
    """A randomized generator failed validation after its retry budget."""
