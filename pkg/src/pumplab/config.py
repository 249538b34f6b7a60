"""Runtime configuration shared by the CLI and the HTTP service."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .automata import DEFAULT_STATE_CAP
from .enumeration import DEFAULT_FRONTIER_CAP
from .syntax import DEFAULT_RESERVED, ReservedSymbols

CONFIG_ENV_VAR = "PUMPLAB_CONFIG"

# key=value names accepted in a config file, mapped onto ReservedSymbols
# fields where applicable.
_RESERVED_KEYS = {
    "union": "union",
    "concat": "concat",
    "star": "star",
    "empty": "empty_language",
    "epsilon": "epsilon",
}
_INT_KEYS = ("max_len", "state_cap")


@dataclass(frozen=True)
class CliConfig:
    reserved: ReservedSymbols = DEFAULT_RESERVED
    output_format: str = "plain"        # plain | json-lines
    max_len: int | None = None          # sampled-MPL bound; None = automatic
    state_cap: int = DEFAULT_STATE_CAP
    frontier_cap: int = DEFAULT_FRONTIER_CAP

    def __post_init__(self):
        if self.output_format not in ("plain", "json-lines"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.max_len is not None and self.max_len < 1:
            raise ValueError("max_len must be positive")
        if self.state_cap < 1 or self.frontier_cap < 1:
            raise ValueError("caps must be positive")


def load_config(path: str | None = None, base: CliConfig | None = None) -> CliConfig:
    """Config from plain key=value lines; falls back to $PUMPLAB_CONFIG.

    Keys: union, concat, star, empty, epsilon, max_len, state_cap. Blank
    lines and '#' comments are ignored; unknown keys are errors.
    """
    config = base or CliConfig()
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR)
    if path is None:
        return config
    reserved_fields: dict[str, str] = {}
    ints: dict[str, int] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key in _RESERVED_KEYS:
                reserved_fields[_RESERVED_KEYS[key]] = value
            elif key in _INT_KEYS:
                ints[key] = int(value)
            else:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    if reserved_fields:
        config = replace(config, reserved=replace(config.reserved, **reserved_fields))
    if "max_len" in ints:
        config = replace(config, max_len=ints["max_len"])
    if "state_cap" in ints:
        config = replace(config, state_cap=ints["state_cap"])
    return config
