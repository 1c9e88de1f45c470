"""Dirichlet spectra of unit-volume boxes: counting, bounds and lambda_k minimisers."""

from ._core import *  # noqa: F401,F403
from ._core import Error, InvalidInput, ResourceLimit, InsufficientData  # noqa: F401

__version__ = "0.1.0"
