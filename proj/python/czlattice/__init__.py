from ._czlattice import (
    CzlatticeError,
    butterfly,
    chain_spectrum,
    run_suite,
    suite_names,
    verify_lattice,
)

__all__ = [
    "CzlatticeError",
    "butterfly",
    "chain_spectrum",
    "run_suite",
    "suite_names",
    "verify_lattice",
]
