"""Python access to the spiral core: the command-line tool and a few typed helpers."""

import json

from ._core import SpiralError, c_parameters, run

__all__ = ["SpiralError", "c_parameters", "run", "run_json", "roots", "facet"]


def run_json(*args, stdin=""):
    """Run a subcommand and decode its JSON output; raises SpiralError on a nonzero status."""
    status, out, err = run([str(a) for a in args], stdin)
    if status != 0:
        raise SpiralError(f"exit {status}: {err.strip()}")
    return json.loads(out)


def roots(series, rank, twist=1):
    from ._core import roots_json

    return json.loads(roots_json(series, rank, twist))


def facet(series, rank, twist, point):
    from ._core import facet_json

    return json.loads(facet_json(series, rank, twist, point))
