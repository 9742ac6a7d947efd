import logging
from dataclasses import dataclass

import numpy as np

from grid.field import GridField
from majorant.disk import disk_majorant_values
from spectral.series import TrigSeries
from utils.errors import InvalidParameter
from utils.helpers import require_exponent

log = logging.getLogger("lumer.majorant")

DISK_SPECTRAL = "disk-spectral"
GRID = "grid"


@dataclass(frozen=True, eq=False)
class MajorantField:
    """A computed harmonic majorant H_U of |U|^p.

    The disk path keeps the boundary series and evaluates by Poisson
    quadrature; the grid path keeps the solved GridField.
    """
    p: float
    source: str
    residual: float = 0.0
    field: GridField | None = None
    series: TrigSeries | None = None
    scheme: str = "poisson-quadrature"
    iterations: int = 0
    rhs_norm: float = 0.0

    def evaluate(self, points):
        points = np.atleast_1d(np.asarray(points, dtype=complex))
        if self.source == DISK_SPECTRAL:
            return disk_majorant_values(self.series, self.p, points)
        return np.array([self.field.at(point, interior=True) for point in points], dtype=float)

    def value_at(self, point):
        return float(self.evaluate([point])[0])

    @property
    def domain(self):
        return self.field.domain if self.field is not None else None


def disk_majorant(u, p):
    """Least harmonic majorant of |u|^p on the unit disk"""
    return MajorantField(require_exponent(p), DISK_SPECTRAL, series=u)


def lumer_norm(majorant, zeta0, p=None):
    """||U||_{p, zeta0} = H_U(zeta0)^{1/p}"""
    if p is not None and not np.isclose(require_exponent(p), majorant.p, rtol=0, atol=1e-15):
        raise InvalidParameter(f"majorant was built for p={majorant.p}, asked for p={p}")
    value = majorant.value_at(zeta0)
    # interpolation and solver noise can dip a zero majorant below 0
    return max(value, 0.0) ** (1.0 / majorant.p)
