#! /usr/bin/env python
"""Deployable access network technologies"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Architecture(Enum):
    """Where the fiber terminates"""
    ADSL = 'ADSL'
    FTTCAB = 'FTTCab'
    FTTB = 'FTTB'
    FTTH = 'FTTH'


class Family(Enum):
    """Transmission technology family"""
    COPPER = 'Copper'
    GPON = 'GPON'
    XGPON = 'XGPON'
    UDWDM = 'UDWDM'
    HPON = 'HPON'


TWO_STAGE_FAMILIES = frozenset({Family.GPON, Family.XGPON})
SINGLE_STAGE_FAMILIES = frozenset({Family.UDWDM})
DATA_RATES = (20, 25, 50, 100)


@dataclass(frozen=True)
class Technology:
    """
    A deployable network state.

    Ids follow ``Architecture_Family_Rate``, e.g. ``FTTB_UDWDM_100``.
    """
    id: str
    architecture: Architecture
    family: Family
    data_rate: int
    stages: int = 1
    label: Optional[str] = None
    provenance: str = 'published'

    @classmethod
    def from_id(cls, tech_id, stages=1, label=None, provenance='published'):
        """
        Build a technology from its id.

        :param str tech_id: ``Architecture_Family_Rate``
        :raises ValueError: when the id does not follow that pattern
        """
        parts = tech_id.split('_')
        if len(parts) != 3:
            raise ValueError(f"technology id {tech_id!r} is not "
                             "Architecture_Family_Rate")
        architecture, family, rate = parts
        return cls(id=tech_id,
                   architecture=Architecture(architecture),
                   family=Family(family),
                   data_rate=int(rate),
                   stages=int(stages),
                   label=label,
                   provenance=provenance)

    @property
    def expected_id(self):
        return f"{self.architecture.value}_{self.family.value}_{self.data_rate}"

    @property
    def is_copper(self):
        return self.architecture is Architecture.ADSL

    @property
    def display_name(self):
        return self.label or self.id

    def __str__(self):
        return self.id


def family_restricted(source, target):
    """
    True when a migration crosses between two-stage and single-stage
    families while targeting 100 Mbps.
    """
    if target.data_rate != 100:
        return False
    families = {source.family, target.family}
    return bool(families & TWO_STAGE_FAMILIES) and bool(families & SINGLE_STAGE_FAMILIES)
