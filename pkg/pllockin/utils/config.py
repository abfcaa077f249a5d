# External imports
import json
import logging

# Local imports
from ..errors import ParameterError

__all__ = ["CONFIG_KEYS", "load_config"]

logger = logging.getLogger(__name__)

# Keys mirror the long CLI flags, with '-' spelled as '_'
CONFIG_KEYS = ("k0", "tau1", "tau2", "omega", "theta0", "x0", "tmax", "h", "eps", "h_theta",
               "format", "out", "workers")

def load_config(path):
    """Read a JSON config object. Returns a dict keyed by CONFIG_KEYS names."""
    logger.info("Loading config: %s", path)

    try:
        with open(path, "r", encoding="utf-8") as fp:
            raw = json.loads(fp.read())
    except OSError as e:
        raise ParameterError("config", "cannot read {}: {}".format(path, e.strerror or e))
    except json.JSONDecodeError as e:
        raise ParameterError("config", "{} is not valid JSON: {}".format(path, e))

    if not isinstance(raw, dict):
        raise ParameterError("config", "{} must hold a JSON object".format(path))

    config = {}
    for key, value in raw.items():
        name = key.replace("-", "_")
        if name not in CONFIG_KEYS:
            raise ParameterError("config", "unknown key {!r} in {}".format(key, path))
        config[name] = value

    return config
