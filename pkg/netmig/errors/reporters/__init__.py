#! /usr/bin/env python
"""
Report interface netmig errors open through BaseError.action

A report is keyed by the error code (VALIDATION_FAILED, IO_ERROR, ...), gets
the error details as updates and is closed when the command line clears the
error before exiting.
"""

from abc import ABC, abstractmethod


class BaseReport(ABC):
    """One report per raised netmig error"""

    @classmethod
    @abstractmethod
    def new(cls, code, message, config):
        """
        Open a report for an error

        :param str code: The machine readable error code, also the report id
        :param str message: The error message
        :param dict config: Reporter settings; ``logging`` holds the logging config
        """

    @classmethod
    @abstractmethod
    def get(cls, report_id, config):
        """
        An already open report

        :param str report_id: The error code the report was opened with
        :param dict config: Reporter settings
        """

    @property
    @abstractmethod
    def report_id(self):
        """The error code"""

    @abstractmethod
    def update(self, **details):
        """
        Add error details, e.g. ``violations`` or ``path``

        :param details: Name=value pairs; list values hold one item per entry
        """

    @abstractmethod
    def close(self):
        """Close the report once the error has been handled"""
