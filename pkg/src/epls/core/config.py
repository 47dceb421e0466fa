"""
Configuration settings for epls.
"""
import os

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value not in (None, '') else default


class Config:
    """Base configuration."""
    # Randomised subgroup searches
    SEED = _env_int('EPLS_SEED', 1)

    # Enumeration bounds
    NORMALIZER_LIMIT = _env_int('EPLS_NORMALIZER_LIMIT', 10**7)
    ENUMERATION_LIMIT = _env_int('EPLS_ENUMERATION_LIMIT', 10**7)
    SET_ORBIT_LIMIT = _env_int('EPLS_SET_ORBIT_LIMIT', 10**8)
    MAX_INCIDENCES = _env_int('EPLS_MAX_INCIDENCES', 10**8)

    # Constructor size limits
    SURVEY_MAX_POINTS = 4096
    AFFINE_MAX_POINTS = 10**6
    GSCRIPT_MAX_POINTS = 10**6
    AG_MAX_POINTS = 10**6
    PSL2_MAX_Q = 257
    PSL2_MAX_DEGREE = _env_int('EPLS_PSL2_MAX_DEGREE', 4096)
    DIFFERENCE_SET_MAX_MODULUS = 10**4
    FIELD_MAX_ORDER = 2**63
    SUBGROUP_SEARCH_TRIES = 20000

    # Pair-coverage validation switches to the sparse path above this
    DENSE_PAIR_LIMIT = _env_int('EPLS_DENSE_PAIR_LIMIT', 4096)

    # Logging
    LOG_LEVEL = os.environ.get('EPLS_LOG_LEVEL', 'WARNING')
