"""Restriction estimates and signal recovery on (Z/NZ)^2."""

from ._core import (
    Ring,
    __version__,
    count_square_roots,
    crt,
    decay_profile,
    dft,
    energy,
    evaluate_restriction,
    exp_sum,
    extend,
    idft,
    main_theorem_constant,
    parabola,
    recover,
    restrict,
    run_cli,
    set_thread_count,
    sharpness_probe,
    square_roots,
    thread_count,
    threshold_sweep,
    uncertainty_search,
    universal_certificate,
    verify_dual,
    verify_l1_l2,
    verify_main_theorem,
)

__all__ = [
    "Ring",
    "__version__",
    "count_square_roots",
    "crt",
    "decay_profile",
    "dft",
    "energy",
    "evaluate_restriction",
    "exp_sum",
    "extend",
    "idft",
    "main_theorem_constant",
    "parabola",
    "recover",
    "restrict",
    "run_cli",
    "set_thread_count",
    "sharpness_probe",
    "square_roots",
    "thread_count",
    "threshold_sweep",
    "uncertainty_search",
    "universal_certificate",
    "verify_dual",
    "verify_l1_l2",
    "verify_main_theorem",
]
