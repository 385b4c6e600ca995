# encoding=utf-8
"""
Budgets and guards

Values are resolved from, lowest precedence first: the module defaults below, an
optional JSON config file, explicit keyword arguments (CLI flags) and the
KNOTOID_MAX_STATES environment variable.
"""
from __future__ import print_function, division
import json
import logging
import os

from .errors import KnotoidGenericError, KnotoidParseError


# Logger
log = logging.getLogger(__file__)

# Largest diagram a state sum is attempted on
MAX_STATE_CROSSINGS = 20
# Search defaults, relative to the input diagram
DEFAULT_EXTRA_CROSSINGS = 4
DEFAULT_EXTRA_HEIGHT = 2
DEFAULT_MAX_STATES = 10 ** 6

ENV_MAX_STATES = "KNOTOID_MAX_STATES"
CONFIG_KEYS = ("max_crossings", "max_height", "max_states", "max_state_crossings")


def env_max_states():
    """ Global guard override from the environment, or None """
    value = os.environ.get(ENV_MAX_STATES)
    if value is None or value == "":
        return None
    try:
        value = int(value)
    except ValueError:
        log.warning("Ignoring non-integer {}={!r}".format(ENV_MAX_STATES, value))
        return None
    if value < 1:
        log.warning("Ignoring non-positive {}={}".format(ENV_MAX_STATES, value))
        return None
    return value


def _arc_height(kmap):
    """ Intersections on the busiest shortcut arc """
    counts = {}
    for fid in kmap.flats():
        arc = kmap.flat_arc(fid)
        counts[arc] = counts.get(arc, 0) + 1
    return max(counts.values()) if counts else 0


def load_config_file(path):
    """ Read budget keys from a JSON config file """
    with open(path) as fobj:
        text = fobj.read()
    try:
        data = json.loads(text)
    except ValueError as err:
        raise KnotoidParseError("invalid config file {}: {}".format(path, err),
                                getattr(err, "lineno", 1), getattr(err, "colno", 1))
    if not isinstance(data, dict):
        raise KnotoidParseError("config file {} must hold a JSON object".format(path))
    unknown = sorted(set(data) - set(CONFIG_KEYS))
    if unknown:
        log.warning("Unknown config keys ignored: {}".format(", ".join(unknown)))
    return dict((k, int(data[k])) for k in CONFIG_KEYS if k in data)


class Budget(object):
    """
    Search budget: crossing and height ceilings, number of diagrams to visit and
    the crossing guard for state sums.
    """
    def __init__(self, max_crossings, max_height, max_states=DEFAULT_MAX_STATES,
                 max_state_crossings=MAX_STATE_CROSSINGS):
        if max_crossings < 0 or max_height < 0 or max_states < 1:
            raise KnotoidGenericError("budgets must be non-negative (max_states positive)")
        self.max_crossings = max_crossings
        self.max_height = max_height
        self.max_states = max_states
        self.max_state_crossings = max_state_crossings

    @classmethod
    def for_map(cls, kmap, config_path=None, **overrides):
        """
        Budget for searching around `kmap`: defaults relative to its size, then the
        config file, then the non-None keyword overrides, then the environment.
        """
        values = {
            "max_crossings": len(kmap.crossings()) + DEFAULT_EXTRA_CROSSINGS,
            "max_height": _arc_height(kmap) + DEFAULT_EXTRA_HEIGHT,
            "max_states": DEFAULT_MAX_STATES,
            "max_state_crossings": MAX_STATE_CROSSINGS,
        }
        if config_path:
            values.update(load_config_file(config_path))
        for key, value in overrides.items():
            if key not in CONFIG_KEYS:
                raise KnotoidGenericError("unknown budget key {}".format(key))
            if value is not None:
                values[key] = int(value)
        env = env_max_states()
        if env is not None:
            log.info("Using %s=%s", ENV_MAX_STATES, env)
            values["max_states"] = env
        return cls(**values)

    def as_dict(self):
        return {
            "max_crossings": self.max_crossings,
            "max_height": self.max_height,
            "max_states": self.max_states,
            "max_state_crossings": self.max_state_crossings,
        }

    def __repr__(self):
        return "Budget[crossings={} height={} states={}]".format(
            self.max_crossings, self.max_height, self.max_states)


def state_sum_guard(max_state_crossings=None):
    """ Crossing limit for state sums """
    if max_state_crossings is not None:
        return max_state_crossings
    return MAX_STATE_CROSSINGS
