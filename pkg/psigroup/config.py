# psigroup/config.py
import os
from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    # Enumeration Configuration
    ENUMERATION_CAP: int = int(os.getenv("PSI_ENUMERATION_CAP", "200000"))
    ISOMORPHISM_ORDER_CAP: int = int(os.getenv("ISOMORPHISM_ORDER_CAP", "64"))
    SUBGROUP_SEARCH_LIMIT: int = int(os.getenv("SUBGROUP_SEARCH_LIMIT", "400"))

    # Arithmetic Sweeps
    LEMMA21_MAX_N: int = int(os.getenv("LEMMA21_MAX_N", "100000"))
    PHI_ORACLE_MAX_N: int = int(os.getenv("PHI_ORACLE_MAX_N", "10000"))
    CLOSED_FORM_MAX_N: int = int(os.getenv("CLOSED_FORM_MAX_N", "2000"))
    # C_n is built and enumerated only up to here; beyond it the closed form is
    # checked against the gcd-sum brute force, n / gcd(k, n) summed over k,
    # up to CLOSED_FORM_MAX_N.
    ENUMERATED_CYCLIC_MAX_N: int = int(os.getenv("ENUMERATED_CYCLIC_MAX_N", "200"))
    RAMANUJAN_TERMS: int = int(os.getenv("RAMANUJAN_TERMS", "300"))
    RAMANUJAN_PRIME_LIMIT: int = int(os.getenv("RAMANUJAN_PRIME_LIMIT", "1000000"))
    LEMMA28_SAMPLES: int = int(os.getenv("LEMMA28_SAMPLES", "200"))
    RANDOM_SEED: int = int(os.getenv("RANDOM_SEED", "1729"))

    # Group Family Sweeps
    LEMMA22_MAX_M: int = int(os.getenv("LEMMA22_MAX_M", "50"))
    LEMMA22_MAX_K: int = int(os.getenv("LEMMA22_MAX_K", "12"))
    PROP2_MAX_K: int = int(os.getenv("PROP2_MAX_K", "25"))
    SWEEP_DIHEDRAL_MAX: int = int(os.getenv("SWEEP_DIHEDRAL_MAX", "64"))
    SWEEP_ABELIAN_MAX: int = int(os.getenv("SWEEP_ABELIAN_MAX", "64"))
    SWEEP_SEMIDIRECT_MAX: int = int(os.getenv("SWEEP_SEMIDIRECT_MAX", "100"))
    CATALOG_MAX_ORDER: int = int(os.getenv("CATALOG_MAX_ORDER", "16"))

    # Application Configuration
    VERBOSE: bool = os.getenv("VERBOSE", "False").lower() == "true"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    WORKERS: int = int(os.getenv("WORKERS", "1"))

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    def get_log_level(self) -> str:
        """Log level for the CLI, lowered to DEBUG in verbose mode."""
        return "DEBUG" if self.VERBOSE else self.LOG_LEVEL.upper()


settings = Settings()
