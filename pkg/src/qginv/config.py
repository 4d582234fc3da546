"""Process-wide knobs: the determinant order cap and verification mode.

Both can be set from the environment (``QGINV_DET_CAP``, ``QGINV_VERIFY``)
and overridden temporarily with :func:`configured`.
"""

import os
from contextlib import contextmanager
from dataclasses import dataclass

DEFAULT_CAP = 7


def _env_flag(name):
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


@dataclass
class Settings:
    cap: int = DEFAULT_CAP
    verify: bool = False


settings = Settings(
    cap=int(os.environ.get("QGINV_DET_CAP", DEFAULT_CAP)),
    verify=_env_flag("QGINV_VERIFY"),
)


@contextmanager
def configured(cap=None, verify=None):
    """Temporarily change the cap and/or verification mode."""
    saved = (settings.cap, settings.verify)
    if cap is not None:
        if cap < 1:
            raise ValueError("cap must be >= 1")
        settings.cap = cap
    if verify is not None:
        settings.verify = verify
    try:
        yield settings
    finally:
        settings.cap, settings.verify = saved
