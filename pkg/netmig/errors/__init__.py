#! /usr/bin/env python
"""
Base error class for netmig operations

Each error netmig raises uses this base class, so the command line can act on
any of them the same way: report it, clear it and exit with its code.
"""

from abc import ABC, abstractmethod

from netmig.errors.reporters.generic import GenericReporter


class BaseError(ABC, Exception):
    """netmig base error class"""

    exit_code = 3

    def __init__(self, **details):
        self._details = details
        super().__init__(self.message)
        self._report = None

    def __str__(self):
        return f"{self.code}: {self.message}"

    @property
    @abstractmethod
    def code(self):
        """Machine readable error code"""

    @property
    @abstractmethod
    def message(self):
        """The error message to use/log"""

    @property
    def details(self):
        """Name/value pairs describing the error"""
        return dict(self._details)

    def action(self, reporter=GenericReporter, config=None):
        """
        Report this error.

        :param reporter: A BaseReport class used to open the report
        :param config: Configuration dictionary for the reporter
        :return: The open report
        """
        self._report = reporter.new(self.code, self.message, config or {})
        if self._details:
            self._report.update(**self._details)
        return self._report

    def clear(self):
        """Close the report opened by action, if any"""
        if self._report is not None:
            self._report.close()
            self._report = None
