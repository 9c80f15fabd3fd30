"""Run the verification suites and store their outcomes."""

from covering_polynomials import ALL_VERIFICATION_SUITES
import hydra
from hydra.core.hydra_config import HydraConfig
from omegaconf import DictConfig
from pathlib import Path
import logging
import pandas as pd
import sys


logger = logging.getLogger(__name__)


@hydra.main(config_path="../../config", config_name="config", version_base=None)
def main(cfg: DictConfig) -> None:
    """Run the verification suites listed in the configuration.

    The outcome of every check is saved to `checks.csv` in the Hydra output directory.

    Args:
        cfg: The Hydra configuration.

    Raises:
        ValueError: If the configuration lists an unknown suite.
    """
    unknown = set(cfg.verify.suites) - set(ALL_VERIFICATION_SUITES)
    if unknown:
        raise ValueError(
            f"Unknown verification suites {sorted(unknown)}. The available suites are "
            f"{sorted(ALL_VERIFICATION_SUITES)}."
        )

    # Run the suites
    results = [ALL_VERIFICATION_SUITES[name](cfg=cfg) for name in cfg.verify.suites]
    for result in results:
        logger.info(result.summary())

    # Save the outcomes
    output_dir = Path(HydraConfig.get().runtime.output_dir)
    checks_path = output_dir / "checks.csv"
    pd.concat([result.to_dataframe() for result in results]).to_csv(
        checks_path, index=False
    )
    logger.info(f"Saved the outcomes of the checks to {checks_path}.")

    if not all(result.passed for result in results):
        logger.warning("Some checks failed.")
        sys.exit(1)


if __name__ == "__main__":
    main()
