"""Physical constants and the frequency-unit conversions shared by all modules.

Values are the exact SI-2019 defining constants, written out as literals so
that every module agrees bit-for-bit and nothing depends on the constants
table of an external library.
"""

import math

#: Planck constant, J s (exact since the 2019 SI redefinition).
PLANCK = 6.62607015e-34

#: Elementary charge, C (exact).
ELEMENTARY_CHARGE = 1.602176634e-19

#: Reduced Planck constant, J s.
HBAR = PLANCK / (2.0 * math.pi)

#: Superconducting flux quantum h / 2e, Wb.
FLUX_QUANTUM = PLANCK / (2.0 * ELEMENTARY_CHARGE)

TWO_PI = 2.0 * math.pi


def angular_frequency(frequency_hz):
    """Convert a frequency in Hz to an angular frequency in rad/s.

    All module interfaces speak Hz; internal rate formulas use rad/s.
    This function (and its inverse below) is the only place the 2*pi
    lives, so the two unit systems cannot drift apart.
    """
    return TWO_PI * frequency_hz


def cyclic_frequency(omega_rad_per_s):
    """Convert an angular frequency in rad/s to a frequency in Hz."""
    return omega_rad_per_s / TWO_PI
