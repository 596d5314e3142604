# config.py

from dotenv import load_dotenv
import os
import logging

# Load environment variables from the .env file
load_dotenv()

LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()

# Configure structured logging (stderr, so stdout reports stay byte-stable)
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format="%(asctime)s - %(levelname)s - %(message)s",
)

def _get_int_env(var_name: str, default: int) -> int:
    raw = os.getenv(var_name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logging.warning(f"Environment variable '{var_name}' has non-integer value '{raw}'; defaulting to {default}.")
        return default

# File formats
FORMAT_VERSION = 1
DATA_DIR = os.getenv('DATA_DIR', os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data'))
BANCHOFF_FAN = os.path.join(DATA_DIR, 'banchoff.fan')

# Coset enumeration
MAX_COSETS = _get_int_env('MAX_COSETS', 100000)

# Monodromy enumeration / lifting bounds
MAX_ENUM_DEGREE = _get_int_env('MAX_ENUM_DEGREE', 7)
MAX_LIFT_DEGREE = _get_int_env('MAX_LIFT_DEGREE', 12)

# Homomorphism counting (exhaustive, so kept small)
HOM_COUNT_MAX_DEGREE = _get_int_env('HOM_COUNT_MAX_DEGREE', 5)
HOM_COUNT_MAX_GENERATORS = _get_int_env('HOM_COUNT_MAX_GENERATORS', 4)

# Tietze simplification
TIETZE_MAX_TOTAL_LENGTH = _get_int_env('TIETZE_MAX_TOTAL_LENGTH', 10000)
TIETZE_MAX_PASSES = _get_int_env('TIETZE_MAX_PASSES', 200)

# SVG rendering
RENDER_SEED = _get_int_env('RENDER_SEED', 7)
RENDER_DPI = _get_int_env('RENDER_DPI', 72)
RENDER_HASH_SALT = os.getenv('RENDER_HASH_SALT', 'johansson')

# Fuzzy suggestions for unknown identifiers in parse errors
SUGGESTION_SCORE_THRESHOLD = _get_int_env('SUGGESTION_SCORE_THRESHOLD', 60)
