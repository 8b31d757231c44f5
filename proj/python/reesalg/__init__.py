"""Python interface to the reesalg engine."""

import json

from ._core import (
    SCHEMA_VERSION,
    Error,
    Instance,
    __version__,
    canonical_text,
    command_names,
    exit_code,
)

__all__ = [
    "SCHEMA_VERSION",
    "Error",
    "Instance",
    "__version__",
    "canonical_text",
    "command_names",
    "error_info",
    "exit_code",
    "load",
    "run",
]


def load(path, **options):
    """Instance from a file; options are n_max, window and seed."""
    return Instance.from_file(str(path), **options)


def run(instance, command, meta=False):
    """Runs a command and returns the parsed JSON document.

    `power` is not available here, use Instance.power_csv.
    """
    if command == "power":
        raise ValueError("use Instance.power_csv for powers")
    text, _violation = instance.run_json(command, meta)
    return json.loads(text)


def error_info(err):
    """The structured error document carried by an Error."""
    return json.loads(err.args[1])
