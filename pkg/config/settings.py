from pathlib import Path
from typing import Any

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Flag names that differ from their RunConfig field
FLAG_KEYS = {"format": "formats", "abs": "absolute"}


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="MACROSTATE_",
        case_sensitive=False,
        extra="ignore",
    )

    app_name: str = "Macrostate Risk"
    app_version: str = "0.1.0"

    # Logging
    debug: bool = False
    log_level: str = "INFO"
    log_file: str | None = None

    # Per-symbol pipelines run on a thread pool of this size
    max_workers: int = Field(default=4, ge=1)

    # Diagram rendering
    svg_width: int = Field(default=800, ge=200)
    svg_height: int = Field(default=600, ge=150)

    # Defaults for non-scientific run parameters
    default_gap_policy: str = "skip"
    default_bucket: str = "yearly"
    default_formats: str = "csv,svg,json"

    def get_default_formats(self) -> list[str]:
        """Parse default output formats from comma-separated string."""
        return [f.strip().lower() for f in self.default_formats.split(",") if f.strip()]

    @staticmethod
    def load_run_file(path: Path) -> dict[str, Any]:
        """Load a key-value YAML run configuration file."""
        with open(path, encoding="utf-8") as f:
            try:
                data = yaml.safe_load(f)
            except yaml.YAMLError as e:
                raise ValueError(f"Config file {path} is not valid YAML: {e}") from e

        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ValueError(f"Config file {path} must contain key-value pairs")

        # YAML keys may use the flag spelling (gap-policy, format) or field spelling
        keys = {str(k).replace("-", "_"): v for k, v in data.items()}
        return {FLAG_KEYS.get(k, k): v for k, v in keys.items()}


settings = Settings()
