import copy
import json
import os

from utils.errors import InvalidRequestError

DEFAULT_CONFIG: dict = {
    "logging": {"level": "WARNING", "files": False, "directory": "logs"},
    "verifier": {"max_agents": 6},
    "synthesis": {"workers": 4, "ensure_observer": False, "minimize_projections": False},
    "decentralized": {"enriched_control": "coordinator"},
    "server": {"host": "0.0.0.0", "port": 5000},
}


def merge(base: dict, override: dict) -> dict:
    res = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(res.get(key), dict):
            res[key] = merge(res[key], value)
        else:
            res[key] = value
    return res


def load_config(path: str | None = None) -> dict:
    """Read a JSON config file over the defaults.

    Without a path, ``config.json`` in the working directory is used when present.
    """
    if path is None:
        if not os.path.exists("config.json"):
            return copy.deepcopy(DEFAULT_CONFIG)
        path = "config.json"
    try:
        with open(path, "r", encoding="utf-8") as file:
            config = json.load(file)
    except OSError as e:
        raise InvalidRequestError(f"Cannot read config file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InvalidRequestError(f"Config file {path} is not valid JSON: {e}") from e
    if not isinstance(config, dict):
        raise InvalidRequestError(f"Config file {path} must contain a JSON object")
    if config.get("decentralized", {}).get("enriched_control", "coordinator") not in (
        "coordinator",
        "observation-only",
    ):
        raise InvalidRequestError("decentralized.enriched_control must be 'coordinator' or 'observation-only'")
    return merge(DEFAULT_CONFIG, config)
