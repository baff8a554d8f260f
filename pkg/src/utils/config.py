"""
Engine configuration loaded from the environment
"""

import os
from dataclasses import dataclass, replace
from dotenv import load_dotenv

load_dotenv()


@dataclass(frozen=True)
class EngineConfig:
    """
    Ceilings and switches shared by every computation

    The Gröbner engine, the resolution builder and the nilpotency search all
    read their limits from one of these so that a single `.env` file (or
    CLI flag) controls how long a run may take before it fails loudly.
    """

    # ============ Gröbner Engine ============
    max_basis_size: int = 2000
    """Largest intermediate basis the Buchberger loop may hold"""

    max_reduction_steps: int = 2_000_000
    """Total single-term reduction steps allowed per basis computation"""

    # ============ Invariants ============
    nilpotency_cap: int = 16
    """Largest power e tried when searching for P^e ⊆ I"""

    resolution_length_cap: int = 32
    """Longest free resolution built before giving up"""

    saturation_cap: int = 32
    """Colon steps tried before (I : I'^∞) must have stabilised"""

    # ============ Output ============
    verbose: bool = False
    """Print progress lines on stderr"""


_ENV_KEYS = {
    "max_basis_size": "DSG_MAX_BASIS",
    "max_reduction_steps": "DSG_MAX_STEPS",
    "nilpotency_cap": "DSG_NILPOTENCY_CAP",
    "resolution_length_cap": "DSG_RESOLUTION_CAP",
    "saturation_cap": "DSG_SATURATION_CAP",
}


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} environment variable must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{name} environment variable must be positive, got {value}")
    return value


def get_config(**overrides) -> EngineConfig:
    """
    Build the engine configuration from the environment.

    Args:
        **overrides: Field values that win over the environment (None is ignored)

    Returns:
        EngineConfig instance

    Environment Variables:
        DSG_MAX_BASIS: Largest intermediate Gröbner basis (default 2000)
        DSG_MAX_STEPS: Reduction step budget per basis (default 2000000)
        DSG_NILPOTENCY_CAP: Largest nilpotency exponent tried (default 16)
        DSG_RESOLUTION_CAP: Longest resolution built (default 32)
        DSG_SATURATION_CAP: Colon steps per saturation (default 32)
        DSG_VERBOSE: "true" to print progress on stderr
    """
    defaults = EngineConfig()
    values = {
        field: _env_int(env_name, getattr(defaults, field))
        for field, env_name in _ENV_KEYS.items()
    }
    values["verbose"] = os.getenv("DSG_VERBOSE", "false").lower() == "true"
    config = EngineConfig(**values)

    explicit = {key: value for key, value in overrides.items() if value is not None}
    return replace(config, **explicit) if explicit else config
