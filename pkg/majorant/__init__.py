from majorant.disk import disk_majorant_value, disk_majorant_values, harnack_bounds, poisson_kernel
from majorant.field import DISK_SPECTRAL, GRID, MajorantField, disk_majorant, lumer_norm
from majorant.solver import grid_majorant, harmonicity_defect, solve_dirichlet

__all__ = [
    "DISK_SPECTRAL",
    "GRID",
    "MajorantField",
    "disk_majorant",
    "disk_majorant_value",
    "disk_majorant_values",
    "grid_majorant",
    "harmonicity_defect",
    "harnack_bounds",
    "lumer_norm",
    "poisson_kernel",
    "solve_dirichlet",
]
