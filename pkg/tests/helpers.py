from spectral.series import TrigSeries

H_FINE = 1 / 64


def re_power(n, size=None):
    """Series of Re z^n = cos(n theta)"""
    if n == 0:
        return TrigSeries.constant(1.0, size)
    return TrigSeries.from_modes({n: 0.5, -n: 0.5}, size)
