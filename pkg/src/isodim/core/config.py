from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import ParseError
from .field import parse_field_spec


class OracleConfig(BaseModel):
    """Limits for the brute-force enumeration oracle."""
    max_points: int = Field(default=1_000_000, gt=0)

    model_config = ConfigDict(frozen=True)


class VerifyConfig(BaseModel):
    """Configuration of the property verification suites."""
    field: Literal["gf2", "gf3"] = "gf2"
    max_dim: int = Field(default=3, ge=1)
    seed: int = 0
    trials: int = Field(default=1000, ge=0)
    random_fields: Tuple[str, ...] = ("GF(2)", "GF(3)", "GF(5)", "GF(7)", "Q")
    max_random_dim: int = Field(default=8, ge=1)
    max_ambient: int = Field(default=5, ge=1)
    max_set_size: int = Field(default=8, ge=1)

    model_config = ConfigDict(frozen=True)

    @field_validator("random_fields")
    @classmethod
    def known_fields(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        """Validate that every random field name parses."""
        for name in v:
            try:
                parse_field_spec(name)
            except ParseError as e:
                raise ValueError(str(e)) from e
        return tuple(v)

    @property
    def exhaustive_modulus(self) -> int:
        return 2 if self.field == "gf2" else 3


class Settings(BaseSettings):
    """Global settings, overridable through ISODIM_* environment variables."""
    debug: bool = False
    log_level: str = "WARNING"
    oracle: OracleConfig = OracleConfig()
    verify: VerifyConfig = VerifyConfig()

    model_config = SettingsConfigDict(
        env_prefix="ISODIM_",
        env_nested_delimiter="__",
        frozen=True
    )


class CliSettings(Settings):
    """Settings for the command line: only explicit arguments, never the environment."""

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings
    ):
        return (init_settings,)


def get_settings() -> Settings:
    """Get the library settings."""
    return Settings()
