from pydantic_settings import BaseSettings, SettingsConfigDict


class BaseConfig(BaseSettings):
    model_config = SettingsConfigDict(case_sensitive=True, extra="ignore")


class Config(BaseConfig):
    ENVIRONMENT: str = "development"
    LOG_LEVEL: str = "INFO"
    P_RND: float = 0.05
    SHUFFLES: int = 10
    SEED: int = 0
    MAX_ITERATIONS: int = 100
    EB_EDGE_BUDGET: int = 50_000
    WALK_LENGTH: int = 4
    REPORT_SCHEMA_VERSION: str = "1"

    model_config = SettingsConfigDict(
        case_sensitive=True, extra="ignore", env_file="./.env.dev"
    )


config: Config = Config()
