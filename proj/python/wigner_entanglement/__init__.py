"""Velocity-mode entanglement of a single boosted spin-1/2 particle.

A particle in an equal superposition of opposite velocities, spin up, is
viewed by an observer moving perpendicular to the particle axis.  The
observer sees the spin rotated oppositely on the two velocity branches,
which entangles spin with velocity and decoheres the velocity modes.
This package computes the rotation angle, the reduced-state coherence
cos(2w), the relative entropy of entanglement E = 1 - S, the maximal
CHSH value B = 2 sqrt(1 + cos^2(2w)) and the pure-state concurrence.
"""

from ._core import (
    AnalysisRecord,
    SuiteResult,
    WignerAngle,
    analyze,
    cnot_limit_fidelity,
    lorentz_gamma,
    rapidity,
    run_sweep,
    selftest,
    sweep_csv,
    wigner_angle,
)

__all__ = [
    "AnalysisRecord",
    "SuiteResult",
    "WignerAngle",
    "analyze",
    "cnot_limit_fidelity",
    "lorentz_gamma",
    "rapidity",
    "run_sweep",
    "selftest",
    "sweep_csv",
    "wigner_angle",
]

__version__ = "0.1.0"
