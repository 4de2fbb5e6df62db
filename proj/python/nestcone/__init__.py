"""Exact divisor/curve pairings and cone certificates on nested Hilbert schemes of points."""

import json
from fractions import Fraction

from . import _nestcone
from ._nestcone import NestconeError, catalog_ids, run

__all__ = [
    "NestconeError",
    "asymptotic_report",
    "butler_check",
    "catalog_ids",
    "curve",
    "divisor",
    "pair",
    "pairing_table",
    "reproduce_table",
    "run",
]


def pair(divisor, curve, surface="p2", space="hilb", n=2, genus=3):
    return Fraction(_nestcone.pair(divisor, curve, surface, space, n, genus))


def divisor(expr, surface="p2", space="hilb", n=2, genus=3):
    return json.loads(_nestcone.divisor(expr, surface, space, n, genus))


def curve(expr, surface="p2", space="hilb", n=2, genus=3):
    return json.loads(_nestcone.curve(expr, surface, space, n, genus))


def pairing_table(surface="p2", space="hilb", n=2, genus=3):
    return json.loads(_nestcone.pairing_table(surface, space, n, genus))


def reproduce_table(table_id, n=None, g=None, i=None):
    return json.loads(_nestcone.reproduce_table(table_id, n, g, i))


def butler_check(i, a, b, n, kmin=1, kmax=1, swap_factors=False):
    return json.loads(_nestcone.butler_check(i, a, b, n, kmin, kmax, swap_factors))


def asymptotic_report(kmax=30):
    return json.loads(_nestcone.asymptotic_report(kmax))
