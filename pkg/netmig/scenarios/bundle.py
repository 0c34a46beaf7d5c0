#! /usr/bin/env python
"""Datasets shipped with netmig"""

import os
from functools import lru_cache

from toolchest import yaml

from netmig.model.scenario import CurveLabel, DemandMix

DATA_DIR = os.path.join(os.path.realpath(os.path.dirname(__file__)), 'data')
MANIFEST = 'manifest.yml'
KINDS = ('scenarios', 'costs', 'curves', 'graphs', 'tariffs')
MIX_SUFFIX = {DemandMix.PURE_RESIDENTIAL: 'residential',
              DemandMix.CONVERGED: 'converged'}


class DatasetBundle():
    """
    Named scenario, cost, curve, graph and tariff files listed in a manifest.

    References look like ``costs/bsg_converged``.
    """

    def __init__(self, root=DATA_DIR):
        self._root = root
        with open(os.path.join(root, MANIFEST), 'r', encoding='utf-8') as handle:
            manifest = yaml.parse(handle.read())
        self._version = str(manifest.get('version', ''))
        self._entries = {kind: dict(manifest.get(kind) or {}) for kind in KINDS}

    @property
    def version(self):
        return self._version

    @property
    def root(self):
        return self._root

    def names(self, kind):
        return sorted(self._entries[kind])

    def path(self, kind, name):
        """
        :raises KeyError: when the bundle has no such entry
        """
        try:
            relative = self._entries[kind][name]
        except KeyError:
            raise KeyError(f"{kind}/{name}") from None
        return os.path.join(self._root, relative)

    def resolve(self, ref):
        """Path of a ``kind/name`` reference"""
        kind, _, name = ref.partition('/')
        if kind not in self._entries or not name:
            raise KeyError(ref)
        return self.path(kind, name)

    def __contains__(self, ref):
        kind, _, name = ref.partition('/')
        return name in self._entries.get(kind, {})

    def scenario_path(self, name):
        return self.path('scenarios', name)

    def curve_ref(self, label):
        """Reference of the bundled curve for a label such as ``realistic``"""
        return f"curves/{CurveLabel(label.title()).value.lower()}"

    def cost_ref(self, name, mix):
        """
        Reference of the cost dataset called ``name`` (e.g. ``BSG``) for a
        demand mix, falling back to the plain name.
        """
        base = name.lower()
        for candidate in (f"{base}_{MIX_SUFFIX[mix]}", base):
            if f"costs/{candidate}" in self:
                return f"costs/{candidate}"
        raise KeyError(f"costs/{base}")

    def all_refs(self):
        return [f"{kind}/{name}" for kind in KINDS for name in self.names(kind)]


@lru_cache(maxsize=None)
def default_bundle():
    return DatasetBundle()
