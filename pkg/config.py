"""Configuration settings for Coulomb Kit"""
import os
from pathlib import Path

from dotenv import load_dotenv

# Pick up a local .env before any environment override is read
load_dotenv()

# Project paths
BASE_DIR = Path(__file__).parent
DATA_DIR = BASE_DIR / "data"
EXAMPLES_DIR = DATA_DIR / "examples"
OUTPUT_DIR = DATA_DIR / "output"
LOG_DIR = DATA_DIR / "logs"

# Input file format
SPEC_SCHEMA_VERSION = 1

# Lattice enumeration
WEYL_ENUMERATION_CAP = int(os.getenv('COULOMB_KIT_WEYL_CAP', 10**6))

# Monopole formula: number of coweight box shells examined before the
# sum is declared non-convergent ("not good")
SHELL_CAP = int(os.getenv('COULOMB_KIT_SHELL_CAP', 64))

# Defaults for the command line
DEFAULT_ORDER = 20
DEFAULT_SAMPLES = 50
DEFAULT_SEED = 7
DEFAULT_WORKERS = 1

# Largest n (dim M = 2n) the Kostant sampler accepts without an explicit seed point
KOSTANT_MAX_N = int(os.getenv('COULOMB_KIT_KOSTANT_MAX_N', 2))

# Range of the small rational parameters used by the group samplers
SAMPLER_NUMERATOR_RANGE = 3
SAMPLER_DENOMINATORS = (1, 2, 3)
SAMPLER_WORD_LENGTH = 4

# Preset groups: name -> family, and how the preset size is read
PRESET_GROUPS = {
    "SL": {"family": "A", "size": "matrix"},
    "PGL": {"family": "A", "size": "matrix"},
    "GL": {"family": "A", "size": "matrix"},
    "Sp": {"family": "C", "size": "matrix"},
    "SO": {"family": "BD", "size": "matrix"},
    "Torus": {"family": "T", "size": "rank"},
}

# Exit codes of the command line tool
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_NOT_GOOD = 3
