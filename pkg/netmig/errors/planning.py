#! /usr/bin/env python
"""
Errors raised while loading scenarios and planning migrations.

Exit codes follow the command line contract: 1 validation, 2 input/output,
3 computational, 4 disagreement between evaluators.
"""

from netmig.errors import BaseError


class ValidationFailed(BaseError):
    """A scenario violates one or more model invariants"""

    code = 'VALIDATION_FAILED'
    exit_code = 1

    def __init__(self, violations, source=None):
        self.violations = list(violations)
        self.source = source
        super().__init__(violations=[str(item) for item in self.violations])

    @property
    def message(self):
        where = f" in {self.source}" if self.source else ''
        return f"{len(self.violations)} violation(s){where}"


class ScenarioIOError(BaseError):
    """A file could not be read or written"""

    code = 'IO_ERROR'
    exit_code = 2

    def __init__(self, path, reason):
        self.path = str(path)
        self.reason = str(reason)
        super().__init__(path=self.path)

    @property
    def message(self):
        return f"{self.path}: {self.reason}"


class ScenarioParseError(BaseError):
    """A document is not valid JSON or does not follow the schema"""

    code = 'PARSE_ERROR'
    exit_code = 2

    def __init__(self, path, reason, line=None, column=None):
        self.path = str(path)
        self.reason = reason
        self.line = line
        self.column = column
        super().__init__(path=self.path, line=line, column=column)

    @property
    def message(self):
        where = self.path
        if self.line is not None:
            where += f":{self.line}:{self.column}"
        return f"{where}: {self.reason}"


class TariffMissing(BaseError):
    """A demanded subscriber class has no tariff at the offered rate"""

    code = 'TARIFF_MISSING'

    def __init__(self, subscriber_class, rate):
        self.subscriber_class = subscriber_class
        self.rate = rate
        super().__init__(subscriber_class=str(subscriber_class), rate=rate)

    @property
    def message(self):
        return f"no tariff for {self.subscriber_class} at {self.rate} Mbps"


class CostMissing(BaseError):
    """A technology has no record in the cost dataset"""

    code = 'COST_MISSING'

    def __init__(self, technology, dataset=None):
        self.technology = technology
        self.dataset = dataset
        super().__init__(technology=technology, dataset=dataset)

    @property
    def message(self):
        return f"no cost record for {self.technology} in {self.dataset}"


class GoalUnreachable(BaseError):
    """No migration path reaches the goal set inside the window"""

    code = 'GOAL_UNREACHABLE'

    def __init__(self, goal, reason):
        self.goal = goal
        self.reason = reason
        super().__init__(goal=str(goal))

    @property
    def message(self):
        return f"goal {self.goal} unreachable: {self.reason}"


class TreeTooLarge(BaseError):
    """The naive search tree would exceed the node cap"""

    code = 'TREE_TOO_LARGE'

    def __init__(self, estimate, cap):
        self.estimate = estimate
        self.cap = cap
        super().__init__(estimate=estimate, cap=cap)

    @property
    def message(self):
        return (f"search tree needs {self.estimate} nodes, cap is {self.cap}; "
                "use the memoized evaluator instead")


class InstanceTooLarge(BaseError):
    """The scenario is beyond the brute-force oracle bounds"""

    code = 'INSTANCE_TOO_LARGE'

    def __init__(self, years, technologies, max_years, max_technologies):
        self.years = years
        self.technologies = technologies
        self.max_years = max_years
        self.max_technologies = max_technologies
        super().__init__(years=years, technologies=technologies,
                         max_years=max_years,
                         max_technologies=max_technologies)

    @property
    def message(self):
        return (f"{self.years} decision years and {self.technologies} "
                f"technologies exceed the oracle bound of {self.max_years} "
                f"years and {self.max_technologies} technologies")


class Unevaluated(BaseError):
    """The search tree handed to the evaluator is malformed"""

    code = 'UNEVALUATED'

    def __init__(self, node, reason):
        self.node = node
        self.reason = reason
        super().__init__(node=node)

    @property
    def message(self):
        return f"cannot evaluate {self.node}: {self.reason}"


class Disagreement(BaseError):
    """Evaluators returned different values or paths"""

    code = 'DISAGREEMENT'
    exit_code = 4

    def __init__(self, rows):
        self.rows = list(rows)
        super().__init__(diff=self.rows)

    @property
    def message(self):
        return f"{len(self.rows)} evaluator result(s) disagree with the reference"
