#! /usr/bin/env python
"""Implementation of a driver that uses the standard python logger."""

import logging
import logging.config

LOGGER_NAME = 'netmig'


def getLogger(config):
    """
    Returns the netmig stdlib logger

    :param config:  Dictionary of values meeting the criteria in the
                    `Configuration dictionary schema
                    <https://docs.python.org/3/library/logging.config.html#logging-config-dictschema>`_.

    A level given under ``root`` is applied to the netmig logger. Without one
    the logger starts at WARNING and keeps whatever level it was given later.
    """
    if 'version' not in config:
        config['version'] = 1
    if len(config) > 2:
        settings = {key: value for key, value in config.items()
                    if key != 'driver'}
        settings.setdefault('disable_existing_loggers', False)
        logging.config.dictConfig(settings)
    logger = logging.getLogger(LOGGER_NAME)
    level = config.get('root', {}).get('level')
    if level is not None:
        logger.setLevel(level)
    elif logger.level == logging.NOTSET:
        logger.setLevel(logging.WARNING)
    return logger
