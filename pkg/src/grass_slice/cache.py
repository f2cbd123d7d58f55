"""Persistent memo store behind the CLI's --cache-dir flag.

A single JSON file holds the nil-Hecke prefix products and finished slice
multiplicities, keyed by Cartan matrix and reduced word.  Values round-trip
through the canonical string grammar, so the cache is readable and is
invalidated wholesale when the package version changes.  A corrupt or stale
file is ignored, never trusted.
"""

from __future__ import annotations

import json
import os
import tempfile

from . import __version__
from .affweyl import AffineWeylElement, word_string, parse_word
from .ratfunc import parse as parse_ratfunc

CACHE_FILENAME = "grass_slice_cache.json"


def _cartan_key(datum):
    return json.dumps(datum.cartan)


class MemoStore:
    """Write-back cache; call ``flush`` to persist."""

    def __init__(self, directory):
        self.directory = directory
        self.path = os.path.join(directory, CACHE_FILENAME)
        self.dirty = False
        self.data = {"version": __version__, "nilhecke": {}, "slices": {}}
        self._load()

    def _load(self):
        try:
            with open(self.path) as handle:
                raw = json.load(handle)
            if raw.get("version") == __version__:
                self.data["nilhecke"] = raw.get("nilhecke", {})
                self.data["slices"] = raw.get("slices", {})
        except (OSError, ValueError):
            pass

    def flush(self):
        if not self.dirty:
            return
        os.makedirs(self.directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                json.dump(self.data, handle)
            os.replace(tmp, self.path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
        self.dirty = False

    # -- nil-Hecke coefficient maps --------------------------------------

    def load_nilhecke(self, element):
        from .equivmult import NilHeckeElement

        datum = element.datum
        table = self.data["nilhecke"].get(_cartan_key(datum), {})
        entry = table.get(word_string(element.reduced_word()))
        if entry is None:
            return None
        coeffs = {}
        for vword, text in entry.items():
            v = AffineWeylElement.from_word(datum, parse_word(vword))
            coeffs[v] = parse_ratfunc(text, datum.rank + 1)
        return NilHeckeElement(datum, coeffs)

    def save_nilhecke(self, element, nh):
        datum = element.datum
        table = self.data["nilhecke"].setdefault(_cartan_key(datum), {})
        key = word_string(element.reduced_word())
        if key in table:
            return
        table[key] = {
            word_string(v.reduced_word()): c.to_canonical_string()
            for v, c in sorted(nh.items(), key=lambda t: t[0].length())
        }
        self.dirty = True

    # -- finished slice multiplicities ------------------------------------

    def load_slice(self, lam, mu):
        table = self.data["slices"].get(_cartan_key(lam.datum), {})
        text = table.get(f"{list(lam.fw)}|{list(mu.fw)}")
        if text is None:
            return None
        return parse_ratfunc(text, lam.datum.rank + 1)

    def save_slice(self, lam, mu, value):
        table = self.data["slices"].setdefault(_cartan_key(lam.datum), {})
        key = f"{list(lam.fw)}|{list(mu.fw)}"
        if key not in table:
            table[key] = value.to_canonical_string()
            self.dirty = True
