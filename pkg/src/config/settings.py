"""
Application Settings
Paths and environment overrides for abpauli runs
"""
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent.parent
OUTPUT_FOLDER = Path(os.getenv("ABPAULI_OUTPUT_DIR", str(PROJECT_ROOT / "outputs")))
LOG_FOLDER = PROJECT_ROOT / "logs"
LOG_FILE = LOG_FOLDER / "abpauli.log"

# Create directories
OUTPUT_FOLDER.mkdir(parents=True, exist_ok=True)
LOG_FOLDER.mkdir(exist_ok=True)

# Runtime overrides
LOG_LEVEL = os.getenv("ABPAULI_LOG_LEVEL", "INFO").upper()
DEFAULT_WORKERS = int(os.getenv("ABPAULI_WORKERS", "1"))
DEFAULT_TOL = float(os.getenv("ABPAULI_TOL", "1e-10"))

# Output formats
SUPPORTED_FORMATS = ["csv", "json"]
DEFAULT_FORMAT = "csv"
