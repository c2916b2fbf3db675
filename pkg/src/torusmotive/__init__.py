"""Motives of SL_r character varieties of torus knots for r <= 4."""

from .assembly import config_report, m_irr, m_irr_for_config, r_irr, r_kappa_motive
from .eigcfg import EigenConfig, Partition, admissible, configs_for_rank, symmetry_order
from .qpoly import MotivePoly, group_motive

__all__ = [
    "EigenConfig",
    "MotivePoly",
    "Partition",
    "admissible",
    "config_report",
    "configs_for_rank",
    "group_motive",
    "m_irr",
    "m_irr_for_config",
    "r_irr",
    "r_kappa_motive",
    "symmetry_order",
]

__version__ = "0.1.0"
