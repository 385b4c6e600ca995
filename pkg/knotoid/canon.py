# encoding=utf-8
"""
Canonical forms, isomorphism and digests of diagrams

Two diagrams are isomorphic (as oriented diagrams on the oriented sphere) exactly
when their canonical keys are equal. The digest is a CRC-32 of the canonical key; it
names diagrams in reports and buckets the dedup table.
"""
from __future__ import print_function, division
import json
import logging

import crcmod.predefined


# Logger
log = logging.getLogger(__file__)

crc_func = crcmod.predefined.mkPredefinedCrcFun("crc-32")


def canonical_key(kmap):
    """ Canonical serialization without metadata """
    data = kmap.canonical().as_dict()
    data.pop("meta", None)
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def digest(kmap):
    """ Eight hex digit CRC-32 of the canonical key """
    return "{:08x}".format(crc_func(canonical_key(kmap).encode("utf-8")))


def isomorphic(m1, m2):
    if type(m1) is not type(m2):
        return False
    return canonical_key(m1) == canonical_key(m2)


class CanonicalTable(object):
    """
    Set of diagrams up to isomorphism. Keys are bucketed by CRC so most lookups
    compare a single short string.
    """
    def __init__(self):
        self._buckets = {}
        self._size = 0

    def add(self, kmap):
        """ Insert; returns False when an isomorphic diagram is already present """
        key = canonical_key(kmap)
        crc = crc_func(key.encode("utf-8"))
        bucket = self._buckets.setdefault(crc, [])
        if key in bucket:
            return False
        if bucket:
            log.info("CRC collision on %08x", crc)
        bucket.append(key)
        self._size += 1
        return True

    def __contains__(self, kmap):
        key = canonical_key(kmap)
        return key in self._buckets.get(crc_func(key.encode("utf-8")), [])

    def __len__(self):
        return self._size
