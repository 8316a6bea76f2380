# coding: utf-8
from __future__ import annotations
from pathlib import Path
from dataclasses import dataclass
import json


class ConfigMeta(type):
    _instance = None

    def __call__(cls, *args, **kwargs):
        if cls._instance is None:
            config_file = Path(Path(__file__).parent, "config.json")
            with open(config_file, "r", encoding="utf-8") as file:
                data = json.load(file)
            cls._instance = super().__call__(**data)
        return cls._instance


@dataclass(frozen=True)
class Config(metaclass=ConfigMeta):
    """
    Singleton Configuration Class

    Library defaults loaded once from the packaged ``config.json``.
    Command line flags override the values per call; nothing here is user editable.
    """

    jacobi_tol: float
    """Jacobi convergence factor, relative to the Frobenius norm of the input."""
    jacobi_max_sweeps: int
    """Maximum number of cyclic Jacobi sweeps."""
    eig_tol: float
    """Relative tolerance used to count an eigenvalue as zero."""
    oracle_dir_steps: int
    """Number of Fibonacci lattice directions scanned by the field oracle."""
    oracle_mag_steps: int
    """Number of field magnitudes scanned by the field oracle."""
    oracle_refine_levels: int
    """Local refinement levels of the field oracle."""
    oracle_scan_steps: int
    """Steps of the one dimensional ``lambda_m`` scan."""
    mc_samples: int
    """Default Monte Carlo sample count."""
    mc_shard_size: int
    """Samples per random substream. Fixed so results do not depend on worker count."""
    mc_generator: str
    """Name of the numpy bit generator used for sampling."""
    map_grid: int
    """Default map resolution per axis."""
    check_tol: float
    """Default tolerance of oracle checks."""
    seed_env_var: str
    """Environment variable read for a default seed."""
