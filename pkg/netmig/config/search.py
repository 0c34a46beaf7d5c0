#! /usr/bin/env python
"""Search tools for netmig configuration files"""

import os


# Immutable so callers cannot reorder the search.
DEFAULT_CONFIG_PATHS = (os.path.realpath('./configs'),
                        '/etc/netmig',
                        os.path.expanduser('~/.netmig'))


def _check_available(filename):   # pragma: no cover
    """
    Check to see if the filename exists and is a file

        :param filename: str A fully qualified path and file
        :returns: Boolean
    """
    return os.path.isfile(filename)


def _as_list(value):
    if value is None:
        return []
    if isinstance(value, (list, tuple)):
        return list(value)
    return [value]


def config_search_paths(override_list=None):
    """
    Generate the directories searched for netmig config files

        :param override_list: A path or list of paths searched after the
                              defaults. Default: None
        :returns: generator of search paths, lowest priority first
    """
    yield from DEFAULT_CONFIG_PATHS
    for override_path in _as_list(override_list):
        yield os.path.realpath(os.path.expanduser(override_path))


def get_config_files(filenames=None, overrides=None, add_defaults=True):
    """
    Find the config files available in the search paths

        :param filenames: list or string of file names to search for Default: None
        :param overrides: list or string of extra search paths Default: None
        :param add_defaults: Boolean Control if the default file name (config.yml)
                             is added to the search

        :returns: generator of available config files
    """
    file_names = ['config.yml'] if add_defaults else []
    file_names.extend(_as_list(filenames))

    for path in config_search_paths(override_list=overrides):
        for filename in file_names:
            full_path = os.path.join(path, filename)
            if _check_available(full_path):
                yield full_path
