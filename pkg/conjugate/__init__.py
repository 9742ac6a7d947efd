from conjugate.field import ConjugateResult, analytic_field, conjugate_on_grid, measure_periods, period_tolerance
from conjugate.gradient import cauchy_riemann_defect, grid_gradient
from conjugate.loops import edge_increment, hole_loops, integrate_path, loop_length, period_around_hole

__all__ = [
    "ConjugateResult",
    "analytic_field",
    "cauchy_riemann_defect",
    "conjugate_on_grid",
    "edge_increment",
    "grid_gradient",
    "hole_loops",
    "integrate_path",
    "loop_length",
    "measure_periods",
    "period_around_hole",
    "period_tolerance",
]
