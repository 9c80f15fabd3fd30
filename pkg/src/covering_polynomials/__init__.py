"""
.. include:: ../../README.md
"""

import importlib.metadata
from typing import Callable

from omegaconf import DictConfig

from .verification import (
    SuiteResult,
    verify_conjectures,
    verify_identities,
    verify_table1,
    verify_table2,
    verify_table3,
)

# Fetches the version of the package as defined in pyproject.toml
__version__ = importlib.metadata.version(__package__)


ALL_VERIFICATION_SUITES: dict[str, Callable[[DictConfig], SuiteResult]] = dict(
    table1=verify_table1,
    table2=verify_table2,
    table3=verify_table3,
    identities=verify_identities,
    conjectures=verify_conjectures,
)
