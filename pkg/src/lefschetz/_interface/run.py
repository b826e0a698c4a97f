import sys
from collections.abc import Callable
from typing import ParamSpec, TypeVar

from lefschetz._console import err_print
from lefschetz.errors import LefschetzError, ParameterError

P = ParamSpec("P")
R = TypeVar("R")

EXIT_VERIFICATION_FAILED = 1
EXIT_BAD_PARAMETERS = 2


def run_command(caller: Callable[P, R], *args: P.args, **kwargs: P.kwargs) -> R:
    """Call into the core, mapping errors to exit codes."""
    try:
        return caller(*args, **kwargs)
    except ParameterError as err:
        err_print(err)
        sys.exit(EXIT_BAD_PARAMETERS)
    except LefschetzError as err:
        err_print(err)
        sys.exit(EXIT_VERIFICATION_FAILED)
