"""Random polytopes from uniform sphere points.

Convex hulls via the incremental Beneath-Beyond algorithm, linear programs
via the dual shadow-vertex walk, spherical cap/belt measures, analytic
facet/pivot bounds, and a seeded Monte Carlo experiment harness.
"""

try:
    from ._randpoly import *  # noqa: F401,F403
    from ._randpoly import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree test runs put the bare module on sys.path
    from _randpoly import *  # noqa: F401,F403

__all__ = [
    "sample",
    "hull",
    "brute_force_hull",
    "hausdorff_to_sphere",
    "solve_lp",
    "section_edge_count",
    "ball_volume",
    "sphere_surface",
    "cap_volume",
    "cap_volume_quadrature",
    "cap_surface",
    "belt_volume",
    "belt_surface",
    "cap_volume_asymptotic",
    "cap_fraction",
    "solve_cap_fraction",
    "solve_delta",
    "gamma_seq",
    "facet_constant",
    "facet_upper_bound",
    "borgwardt_bound",
    "facet_survival_probability",
    "run_experiment",
    "fit_exponent",
]
