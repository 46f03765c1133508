from __future__ import annotations

from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    budget: int = 10**9
    log_level: str = "INFO"
    oracle_cap: int = 10**6
    search_max_limit: int = 10**5
    decimal_precision: int = 30
    cache_db_path: Optional[str] = None
    jobs: int = 1

    model_config = SettingsConfigDict(
        env_prefix="PARTMULT_",
        env_file=".env",
        env_file_encoding="utf-8",
    )


settings = Settings()
