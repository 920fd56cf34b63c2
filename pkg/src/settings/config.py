from pydantic_settings import BaseSettings, SettingsConfigDict

# Define default values
OUTPUT_DIR = "data/output"
LOG_LEVEL = "INFO"

# Quadrature
GAUSS_ORDER = 32
GEOMETRIC_REFINE_LEVELS = 20
LOG_GRID_POINTS = 400
REL_TOL = 1e-9

# Variational K-functional (linear programs)
LP_TOL = 1e-9
MESH_START = 256
MESH_CAP = 8192
MESH_REL_CHANGE = 1e-4

# Sampled K-curves
KCURVE_T_MIN = 1e-4
KCURVE_T_MAX = 10.0
KCURVE_POINTS_PER_DECADE = 8

# Verification runs
DEFAULT_SEED = 7
WORKERS = 1
CSV_SIGNIFICANT_DIGITS = 17


class Settings(BaseSettings):
    OUTPUT_DIR: str = OUTPUT_DIR
    LOG_LEVEL: str = LOG_LEVEL

    GAUSS_ORDER: int = GAUSS_ORDER
    GEOMETRIC_REFINE_LEVELS: int = GEOMETRIC_REFINE_LEVELS
    LOG_GRID_POINTS: int = LOG_GRID_POINTS
    REL_TOL: float = REL_TOL

    LP_TOL: float = LP_TOL
    MESH_START: int = MESH_START
    MESH_CAP: int = MESH_CAP
    MESH_REL_CHANGE: float = MESH_REL_CHANGE

    KCURVE_T_MIN: float = KCURVE_T_MIN
    KCURVE_T_MAX: float = KCURVE_T_MAX
    KCURVE_POINTS_PER_DECADE: int = KCURVE_POINTS_PER_DECADE

    DEFAULT_SEED: int = DEFAULT_SEED
    WORKERS: int = WORKERS
    CSV_SIGNIFICANT_DIGITS: int = CSV_SIGNIFICANT_DIGITS

    # Pydantic v2 settings configuration
    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="CESARO_",
        extra="ignore",  # Ignore extra env vars present in .env or environment
    )


settings = Settings()
