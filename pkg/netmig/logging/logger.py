#! /usr/bin/env python
"""Interface to get a configured logger"""

import importlib

DEFAULT_DRIVER = 'netmig.logging.drivers.default'


def getLogger(config=None):
    """
    Returns a logger object of the type specified.

    :param config: Dictionary of values to configure the desired logger object.

    Passing None gives the default driver with its default level. To raise
    the verbosity of the default driver::

      {'driver': 'netmig.logging.drivers.default',
       'root': {'level': 'DEBUG'}}

    The ``driver`` key names a module implementing ``getLogger(config)``; the
    rest of the dictionary is handed to that driver.
    """
    if not config:
        config = _default_config()
    try:
        module = importlib.import_module(config.get('driver', DEFAULT_DRIVER))
        return module.getLogger(dict(config))
    except ModuleNotFoundError as e:
        logger = getLogger(_default_config())
        logger.error('Loading the default driver, {0}'.format(e.msg))
        return logger


def _default_config():
    return {'driver': DEFAULT_DRIVER}
