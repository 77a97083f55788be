"""Exact computer algebra for critical-value deformations of Morse-Bott potentials."""

from .algebra import AlgebraElement, Context, Generator, mul, substitute, truncate
from .critical import CriticalData, DeformationPath, solve_critical, universal_phi_c
from .gerstenhaber import GerstenhaberModel, MCElement, mc_check, schouten
from .parse import parse

__all__ = [
    "AlgebraElement", "Context", "Generator", "mul", "substitute", "truncate",
    "CriticalData", "DeformationPath", "solve_critical", "universal_phi_c",
    "GerstenhaberModel", "MCElement", "mc_check", "schouten", "parse",
]
