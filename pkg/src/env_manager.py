"""
Central env manager for bopdepth. Loads .env once into local variables; other modules import from here.

Uses python-dotenv with override=False so that already-set env vars (e.g. EF_MEMO_ENTRY_CAP=500000 in the shell)
take precedence over .env. Load order: .env then .env.local (if present); .env.local overrides .env for
keys not already set. Keep machine-local values (e.g. a scratch DATA_DIR) in .env.local.

Also owns get_logger(): every long-running component (solver, experiment, acceptance suite, CLI) writes
its own <name>.log under LOG_DIR.
"""
import logging
from pathlib import Path

_ROOT = Path(__file__).resolve().parent.parent


def _load_env() -> None:
    try:
        from dotenv import load_dotenv
        # override=False: shell / process env wins
        load_dotenv(_ROOT / ".env", override=False)
        local_env = _ROOT / ".env.local"
        if local_env.is_file():
            load_dotenv(local_env, override=False)
    except ImportError:
        pass


_load_env()

_ENV_LOCAL_PATH = _ROOT / ".env.local"

# Must import after _load_env so .env is applied
import os


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() not in ("false", "0", "no", "off")


# --- Paths (derived from project root unless overridden) ---
ROOT = _ROOT
DATA_DIR = Path(os.getenv("DATA_DIR", str(ROOT / "data")))
LOG_DIR = Path(os.getenv("LOG_DIR", str(DATA_DIR / "logs")))
EXPERIMENT_DIR = Path(os.getenv("EXPERIMENT_DIR", str(DATA_DIR / "experiments")))

# --- Logging ---
BOP_LOG_LEVEL = os.getenv("BOP_LOG_LEVEL", "INFO").strip().upper()
# If false/0/no/off, loggers get no file handler (tests, read-only checkouts).
BOP_LOG_TO_FILE = _flag("BOP_LOG_TO_FILE", "true")

# --- Game solver ---
EF_MEMO_ENTRY_CAP = int(os.getenv("EF_MEMO_ENTRY_CAP", "2000000"))

# --- Params ---
# 0 means "use the order of the tree" (always enough to reach a fine r).
FINENESS_CAP = int(os.getenv("FINENESS_CAP", "0"))

# --- Experiments ---
EXPERIMENT_SEED = int(os.getenv("EXPERIMENT_SEED", "1"))
EXPERIMENT_WORKERS = int(os.getenv("EXPERIMENT_WORKERS", "4"))

# --- Acceptance suite (verify) ---
VERIFY_SEED = int(os.getenv("VERIFY_SEED", "20240601"))
VERIFY_QUICK = _flag("VERIFY_QUICK", "false")

# --- Debug: list of all exported names (for print_env_for_debug) ---
_ENV_MANAGER_VARS = [
    "ROOT", "DATA_DIR", "LOG_DIR", "EXPERIMENT_DIR",
    "BOP_LOG_LEVEL", "BOP_LOG_TO_FILE",
    "EF_MEMO_ENTRY_CAP", "FINENESS_CAP",
    "EXPERIMENT_SEED", "EXPERIMENT_WORKERS",
    "VERIFY_SEED", "VERIFY_QUICK",
]


def get_logger(name: str) -> logging.Logger:
    """Named logger writing to LOG_DIR/<name>.log; configured once per process."""
    log = logging.getLogger(f"bopdepth.{name}")
    if log.handlers:
        return log
    log.setLevel(getattr(logging, BOP_LOG_LEVEL, logging.INFO))
    log.propagate = False
    if BOP_LOG_TO_FILE:
        try:
            LOG_DIR.mkdir(parents=True, exist_ok=True)
            h = logging.FileHandler(LOG_DIR / f"{name}.log", encoding="utf-8")
        except OSError:
            h = logging.NullHandler()
    else:
        h = logging.NullHandler()
    h.setFormatter(logging.Formatter("%(asctime)s [%(levelname)s] %(message)s"))
    log.addHandler(h)
    return log


def print_env_for_debug() -> None:
    """Print all env_manager variables for debugging."""
    import sys
    mod = sys.modules.get("env_manager") or sys.modules.get("__main__")
    if mod is None:
        return
    for name in _ENV_MANAGER_VARS:
        print(f"  {name}={getattr(mod, name, None)!r}")
    local_path = _ENV_LOCAL_PATH
    print(f"  ---")
    print(f"  .env.local path: {local_path}")
    print(f"  .env.local exists: {local_path.is_file()}")


if __name__ == "__main__":
    print("env_manager variables:")
    print_env_for_debug()
