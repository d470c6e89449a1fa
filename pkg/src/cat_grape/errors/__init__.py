"""
Custom exceptions for the cat-grape package.

Each error inherits from :class:`CatGrapeError`, itself a ``RuntimeError``, so
callers can decide whether to catch specific numerical failures or allow them
to bubble up to the command-line handler.
"""

from .cat_grape_error import CatGrapeError
from .config_parse_error import ConfigParseError
from .dimension_mismatch_error import DimensionMismatchError
from .integration_error import IntegrationError
from .invalid_control_error import InvalidControlError
from .invalid_dimension_error import InvalidDimensionError
from .non_physical_channel_error import NonPhysicalChannelError
from .reconstruction_error import ReconstructionError
from .truncation_error import TruncationError

__all__ = [
    "CatGrapeError",
    "ConfigParseError",
    "DimensionMismatchError",
    "IntegrationError",
    "InvalidControlError",
    "InvalidDimensionError",
    "NonPhysicalChannelError",
    "ReconstructionError",
    "TruncationError",
]
