"""Error taxonomy shared by the library and the CLI.

InputError covers malformed or out-of-range user input (CLI exit code 1),
ContractError covers violated preconditions and invariants such as size
limits, unfair schedules, or non-adjacent window concatenation (exit code 2).
"""


class InputError(ValueError):
    pass


class RangeError(InputError):
    """A time or window argument falls outside the graph's lifetime."""


class ContractError(RuntimeError):
    pass
