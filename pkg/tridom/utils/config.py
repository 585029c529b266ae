# tridom/utils/config.py
import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass, replace

from tridom.utils import constants

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    """Budgets and parallelism for the exact oracles and generators."""
    vertex_budget: int = constants.DEFAULT_VERTEX_BUDGET
    node_budget: int = constants.DEFAULT_NODE_BUDGET
    dk_budget: int = constants.DEFAULT_DK_BUDGET
    threads: int = constants.DEFAULT_THREADS

    def with_overrides(self, **overrides) -> "Settings":
        clean = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **clean)


def _env_int(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        log.warning(f"Ignoring non-integer {name}={raw!r}; using {default}.")
        return default
    if value < 1:
        log.warning(f"Ignoring non-positive {name}={value}; using {default}.")
        return default
    return value


def load_settings(env: Mapping[str, str] | None = None) -> Settings:
    env = os.environ if env is None else env
    settings = Settings(
        vertex_budget=_env_int(env, constants.ENV_VERTEX_BUDGET, constants.DEFAULT_VERTEX_BUDGET),
        node_budget=_env_int(env, constants.ENV_NODE_BUDGET, constants.DEFAULT_NODE_BUDGET),
        threads=_env_int(env, constants.ENV_THREADS, constants.DEFAULT_THREADS),
    )
    log.debug(f"Loaded settings: {settings}")
    return settings


_active: Settings | None = None


def get_settings() -> Settings:
    global _active
    if _active is None:
        _active = load_settings()
    return _active


def use_settings(settings: Settings | None) -> Settings | None:
    """Install process-wide settings; returns the previous ones (None = reload from env)."""
    global _active
    previous = _active
    _active = settings
    return previous


def resolve(settings: Settings | None) -> Settings:
    return settings if settings is not None else get_settings()
