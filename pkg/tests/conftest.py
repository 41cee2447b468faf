from __future__ import annotations

import pytest
from hypothesis import settings

from flagroots.classify import classify_all, enumerate_projections
from flagroots.rootsys import CartanType

settings.register_profile("ci", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("ci")

EXCEPTIONAL = [CartanType.from_label(lbl)
               for lbl in ("E6", "E7", "E8", "F4", "G2")]


@pytest.fixture(scope="session")
def all_projections():
    """(painting, system, invariants) for every painting of every
    exceptional group (computed once per session)."""
    return {g: enumerate_projections(g, 1) for g in EXCEPTIONAL}


@pytest.fixture(scope="session")
def records():
    """Classification b2 >= 2 for the five exceptional groups."""
    return classify_all(2)


def find_class(records, group_label: str, key: tuple):
    group = CartanType.from_label(group_label)
    for rec in records[group]:
        if rec.tuple.key == key:
            return rec
    raise KeyError((group_label, key))
