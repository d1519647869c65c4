"""Distance spectral radius and perfect k-matching toolkit."""

from ._kms import *  # noqa: F401,F403
from ._kms import KmsError  # noqa: F401

__version__ = "0.1.0"
