"""Vertex partitions of planar graphs without 4- and 5-cycles into a forest
of maximum degree 3 and a forest of maximum degree 4, with the discharging
audit and reducible configurations behind them."""

from .classify import Classification, classify
from .configs import ConfigWitness, detect, find_any
from .discharging import ChargeLedger, PendentMode, Verdict, apply_rules, audit
from .partition import F3F4, Partition, PartSpec, count_or_enumerate, parse_specs, solve, verify
from .planegraph import PlaneGraph, build, class_membership, from_rotation
from .reducer import partition_constructively

__version__ = "0.1.0"
