"""Configuration settings for the zero-divisor graph lab"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..utils.errors import ConfigurationError

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Main settings for the zero-divisor graph lab"""

    model_config = SettingsConfigDict(
        env_prefix="ZDGRAPH_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Server configuration
    server_name: str = Field(
        default="zdgraph-mcp",
        description="MCP server name"
    )
    server_version: str = Field(
        default="0.3.0",
        description="MCP server version"
    )
    transport: str = Field(
        default="stdio",
        description="MCP transport (stdio or http)"
    )
    log_level: str = Field(
        default="INFO",
        description="Logging level"
    )

    # Oracle and harness defaults
    default_alphabet: str = Field(
        default="1,2",
        description="Blow-up value alphabet"
    )
    vertex_cap: int = Field(
        default=200,
        description="Largest blow-up the oracle will materialize"
    )
    oracle_budget_seconds: float = Field(
        default=30.0,
        description="Time budget for exact colouring, domination and cycle scans"
    )
    hull_samples: int = Field(default=1000, description="Random pairs per hull check")
    iso_samples: int = Field(default=500, description="Random pairs per ring isomorphism check")
    iso_rounds: int = Field(default=20, description="Random automorphisms per model in verify")
    orthogonal_samples: int = Field(
        default=1000,
        description="Orthogonal triples sampled per model"
    )
    default_seed: int = Field(default=0, description="Seed for every sampled check")
    verify_workers: int = Field(
        default=1,
        description="Worker threads for the verify matrix (1 runs sequentially)"
    )
    config_paths: List[str] = Field(
        default_factory=lambda: [
            "./configs",
            "~/.config/zdgraph-mcp",
            "/etc/zdgraph-mcp",
        ],
        description="Paths to search for run configurations"
    )

    @property
    def expanded_config_paths(self) -> List[Path]:
        """Get expanded configuration paths"""
        paths = []
        for path_str in self.config_paths:
            expanded = Path(path_str).expanduser().resolve()
            if expanded.exists():
                paths.append(expanded)
        return paths

    def find_run_config(self, name: str) -> Optional[Path]:
        """Find a run configuration file

        A literal path wins; otherwise ``<name>.conf`` is searched for in
        every config path.

        Args:
            name: File path or bare configuration name

        Returns:
            Path to config file or None if not found
        """
        literal = Path(name).expanduser()
        if literal.is_file():
            return literal

        config_filename = name if name.endswith(".conf") else f"{name}.conf"
        for config_path in self.expanded_config_paths:
            config_file = config_path / config_filename
            if config_file.exists():
                logger.info(f"Found run config: {config_file}")
                return config_file

        logger.warning(f"No run config found for: {name}")
        return None

    def list_run_configs(self) -> List[str]:
        """List all run configurations found in the config paths

        Returns:
            Sorted configuration names
        """
        names = set()
        for config_path in self.expanded_config_paths:
            for config_file in config_path.glob("*.conf"):
                names.add(config_file.stem)
        return sorted(names)


RUN_KEYS = (
    "ground",
    "ideal",
    "flavor",
    "window",
    "alphabet",
    "cap",
    "out",
    "seed",
    "only",
    "mutate",
    "psi",
    "target_ground",
    "target_ideal",
    "budget",
)

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


class RunConfig(BaseModel):
    """One CLI run, as text fields; parsing into domain objects happens in the cli"""

    model_config = ConfigDict(frozen=True)

    ground: str = "countable"
    ideal: str = "finite"
    flavor: str = "cp"
    window: Optional[str] = None
    alphabet: str = "1,2"
    cap: int = 200
    out: Optional[str] = None
    seed: int = 0
    only: Optional[str] = None
    mutate: bool = False
    psi: Optional[str] = None
    target_ground: Optional[str] = None
    target_ideal: Optional[str] = None
    budget: float = 30.0


def _coerce(key: str, value: Any) -> Any:
    if key in ("cap", "seed"):
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigurationError(f"'{key}' must be an integer, got '{value}'")
    if key == "budget":
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ConfigurationError(f"'budget' must be a number, got '{value}'")
    if key == "mutate" and isinstance(value, str):
        lowered = value.strip().lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise ConfigurationError(f"'mutate' must be a boolean, got '{value}'")
    return value


def load_run_config(
    path: Optional[Path | str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    base: Optional[Settings] = None,
) -> RunConfig:
    """Build a RunConfig from settings defaults, an optional key=value file, then flags

    Args:
        path: Config file path or name searched in the config paths
        overrides: Flag values; None entries are ignored so file values survive
        base: Settings supplying defaults (the global settings if omitted)

    Returns:
        Frozen RunConfig

    Raises:
        ConfigurationError: If the file is missing or holds unknown keys or bad values
    """
    base = base or settings
    values: Dict[str, Any] = {
        "alphabet": base.default_alphabet,
        "cap": base.vertex_cap,
        "seed": base.default_seed,
        "budget": base.oracle_budget_seconds,
    }

    if path is not None:
        config_file = base.find_run_config(str(path))
        if config_file is None:
            raise ConfigurationError(
                f"Run configuration not found: {path}. "
                f"Searched in: {', '.join(str(p) for p in base.expanded_config_paths)}"
            )
        raw = dotenv_values(config_file)
        unknown = sorted(set(raw) - set(RUN_KEYS))
        if unknown:
            raise ConfigurationError(f"Unknown keys in {config_file}: {', '.join(unknown)}")
        for key, value in raw.items():
            if value is not None:
                values[key] = value
        logger.info(f"Loaded run config from {config_file}")

    for key, value in (overrides or {}).items():
        if key not in RUN_KEYS:
            raise ConfigurationError(f"Unknown run option: {key}")
        if value is not None:
            values[key] = value

    return RunConfig(**{key: _coerce(key, value) for key, value in values.items()})


# Global settings instance
settings = Settings()
