"""Plumbing graphs, their wrapped forms and Stein handlebody diagrams."""

import json

from . import _core
from ._core import (
    DivisionByZero,
    DomainError,
    Error,
    ParseError,
    SearchExhausted,
    UnsupportedShape,
    ncf_eval,
    ncf_expand,
    run_cli,
    transform_slope,
)


def parse_graph(text):
    return json.loads(_core.parse_graph(text))


def validate(text):
    return json.loads(_core.validate(text))


def torus_classes(text):
    return json.loads(_core.torus_classes(text))


def decompose(text):
    return json.loads(_core.decompose(text))


def wrap(text):
    return json.loads(_core.wrap(text))


def assemble(text):
    return json.loads(_core.assemble(text))


def family_y(text):
    return json.loads(_core.family_y(text))


def lower_bound(text):
    return int(_core.lower_bound(text))


def mintwist_upper_bound(text):
    return int(_core.mintwist_upper_bound(text))


def torsion_upper_bound(text, m=1):
    return int(_core.torsion_upper_bound(text, m))
