"""Configuring primeweave from a dictionary or a YAML file.

Example configuration::

    limits:
        max_nodes: 1000000
        time_limit: 30
        jobs: 4

    labelers:
        hairy: mypackage.labelers.label_hairy_greedy

    logging:
        root:
            level: INFO
            handlers: [console]
        handlers:
            console:
                class: logging.StreamHandler
                level: INFO

Every section is optional. Anything not given falls back to :py:mod:`primeweave.core.defaults`.
"""

import io
import logging
import logging.config

import yaml

from zope.dottedname.resolve import resolve

from .defaults import FAMILY_LABELER_DEFAULTS
from .labelings.registry import LabelerRegistry
from .utils.dictutil import MergeError
from .utils.dictutil import merge_dict


logger = logging.getLogger(__name__)


#: Top level sections the configurator understands
SECTIONS = ("limits", "labelers", "logging")


class ConfigurationError(Exception):
    """ConfigurationError is thrown when the Configurator thinks something cannot make sense with the config data."""


def _check_count(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ConfigurationError("limits.{} must be an integer >= {}, got {!r}".format(name, minimum, value))
    return value


class Configurator:
    """Read configuration data and set up :py:class:`primeweave.core.app.PrimeWeaveApp` accordingly."""

    def __init__(self, app):
        """
        :param app: :py:class:`primeweave.core.app.PrimeWeaveApp` instance
        """
        self.app = app

        #: Store full parsed configuration as Python dict for later consumption
        self.config = None

    def setup_limits(self, config):
        """Apply the ``limits`` section on top of the defaults.

        :param dict config: ``limits`` configuration section or None
        """
        limits = self.app.limits
        if not config:
            return limits

        if not isinstance(config, dict):
            raise ConfigurationError("limits section must be mapping like")

        for name, value in config.items():
            if name not in limits.FIELDS:
                raise ConfigurationError("Unknown limit {}".format(name))

            if name == "time_limit":
                if value is not None and (isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0):
                    raise ConfigurationError("limits.time_limit must be a positive number of seconds, got {!r}".format(value))
            else:
                _check_count(name, value, 0 if name == "max_nodes" else 1)

            setattr(limits, name, value)

        return limits

    def setup_labelers(self, config):
        """Resolve the ``labelers`` section into a registry.

        Keys not mentioned keep their default labeler.

        :param dict config: labeler key -> dotted name of the labeler function
        """
        names = dict(FAMILY_LABELER_DEFAULTS)
        if config:
            if not isinstance(config, dict):
                raise ConfigurationError("labelers section must be mapping like")
            for key, dotted_name in config.items():
                if key not in FAMILY_LABELER_DEFAULTS:
                    raise ConfigurationError("Unknown labeler key {}".format(key))
                names[key] = dotted_name

        registry = LabelerRegistry()
        for key, dotted_name in sorted(names.items()):
            try:
                labeler = resolve(dotted_name)
            except (ImportError, AttributeError, ValueError) as e:
                raise ConfigurationError("Could not resolve labeler {} for {}".format(dotted_name, key)) from e
            if not callable(labeler):
                raise ConfigurationError("Labeler {} for {} is not callable".format(dotted_name, key))
            registry.register(key, labeler)

        return registry

    def load_from_dict(self, config):
        """Load configuration from Python dictionary.

        Populates ``app`` with the limits and labelers.
        """
        if not isinstance(config, dict):
            raise ConfigurationError("Configuration must be mapping like")

        for section in config:
            if section not in SECTIONS:
                raise ConfigurationError("Unknown configuration section {}".format(section))

        self.setup_limits(config.get("limits"))
        self.app.labelers = self.setup_labelers(config.get("labelers"))

        self.config = config
        self.app.config = config

    @classmethod
    def setup_logging(cls, config):
        """Replace the console logging with a ``logging.config.dictConfig`` setup.

        :param config: ``logging`` configuration section
        """
        config = dict(config)
        config["version"] = 1
        try:
            logging.config.dictConfig(config)
        except (ValueError, TypeError, AttributeError, ImportError) as e:
            raise ConfigurationError("Bad logging section: {}".format(e)) from e

    @staticmethod
    def prepare_yaml_file(fname):
        """Extract config dictionary from a YAML file."""
        try:
            with io.open(fname, "rt") as stream:
                config = yaml.safe_load(stream)
        except OSError as e:
            raise ConfigurationError("Could not read configuration file {}: {}".format(fname, e)) from e
        except yaml.YAMLError as e:
            raise ConfigurationError("Configuration file {} is not valid YAML: {}".format(fname, e)) from e

        # An empty file means all defaults
        if config is None:
            config = {}

        if not type(config) == dict:
            raise ConfigurationError("YAML configuration file must be mapping like")

        return config

    def load_yaml_file(self, fname, overrides=None):
        """Load config from a YAML file.

        :param fname: Path to the YAML file

        :param overrides: Python nested dicts for specific setting overrides, None values are skipped
        """
        config = self.prepare_yaml_file(fname)
        if overrides:
            try:
                merge_dict(config, overrides)
            except MergeError as e:
                raise ConfigurationError(str(e)) from e
        self.load_from_dict(config)
        logger.debug("Loaded configuration from %s", fname)
