"""Configuration settings for the twisted-hv library and CLI."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings with HV_ env prefix."""

    model_config = SettingsConfigDict(env_prefix="HV_", env_file=".env", extra="ignore")

    SERVICE_NAME: str = "twisted-hv"
    DEBUG: bool = False

    # Windows and truncation
    DEFAULT_WINDOW: int = 6  # half-width of the [-W, W]^2 coefficient window
    MODULE_DEGREE: int = 8
    MODE_WINDOW: int = 6
    M_BOUND: int = 3  # |m| bound for rank-two basis enumeration
    RANK_TWO_RANGE: int = 3  # outer indices (m, r) sampled in [-R, R]^2
    MAX_LOCALITY_ORDER: int = 8

    # Straightening
    ACT_CACHE_SIZE: int = 200_000
    STRAIGHTEN_DEPTH_LIMIT: int = 400

    # Sweeps
    SWEEP_WORKERS: int = 4


settings = Settings()
