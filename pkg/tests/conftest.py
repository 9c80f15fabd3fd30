"""General functions and fixtures related to `pytest`."""

import pytest
from typing import Generator
from omegaconf import DictConfig
from hydra import compose, initialize
import sys


initialize(config_path="../config", version_base=None)


def pytest_configure() -> None:
    """Set a global flag when `pytest` is being run."""
    setattr(sys, "_called_from_test", True)


def pytest_unconfigure() -> None:
    """Unset the global flag when `pytest` is finished."""
    delattr(sys, "_called_from_test")


@pytest.fixture(scope="session")
def cfg() -> Generator[DictConfig, None, None]:
    yield compose(
        config_name="config",
        overrides=["progress_bars=false"],
    )


@pytest.fixture(scope="session")
def small_cfg() -> Generator[DictConfig, None, None]:
    """A configuration small enough for the verification suites to run quickly."""
    yield compose(
        config_name="config",
        overrides=[
            "progress_bars=false",
            "max_rank=4",
            "lattice_max_rank=3",
            "distributive_max_rank=4",
            "bc_isomorphism_max_rank=3",
            "recurrence_max_rank=6",
            "random_posets.count=20",
            "random_posets.max_size=7",
            "random_posets.lattice_count=5",
            "random_posets.lattice_max_size=8",
            "conjectures.dn_verified_ranks=[4]",
            "conjectures.dn_report_ranks=[]",
            "conjectures.truncation_trials=5",
            "conjectures.truncation_max_size=5",
        ],
    )
