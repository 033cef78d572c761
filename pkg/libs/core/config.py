"""
Configuration management using Pydantic settings
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_prefix="FORCING_LAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Exact search budgets
    search_node_limit: int = Field(2_000_000, ge=1)
    structure_node_limit: int = Field(500_000, ge=1)
    clique_cover_max_vertices: int = Field(16, ge=1)

    # Harness
    default_seed: int = Field(20240601)
    report_dir: Optional[str] = Field(None)

    # Logging
    log_level: str = Field("WARNING")
    log_format: str = Field("console")


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
