"""Physical constants (CODATA 2018, SI) and unit conversions.

All values are the CODATA 2018 recommended values as published by NIST
(https://physics.nist.gov/cuu/Constants/). Exact values since the 2019 SI
redefinition are marked as such.
"""

import math

G = 6.67430e-11  # m^3 kg^-1 s^-2, CODATA 2018
E_CHARGE = 1.602176634e-19  # C, exact
EPSILON_0 = 8.8541878128e-12  # F m^-1, CODATA 2018
C_LIGHT = 299792458.0  # m s^-1, exact
HBAR = 1.054571817e-34  # J s, exact (h/2pi truncated as published)
K_B = 1.380649e-23  # J K^-1, exact
PROTON_MASS = 1.67262192369e-27  # kg, CODATA 2018
NEUTRON_MASS = 1.67492749804e-27  # kg, CODATA 2018
ATOMIC_MASS_UNIT = 1.66053906660e-27  # kg, CODATA 2018
AVOGADRO = 6.02214076e23  # mol^-1, exact

# m0 in the heating-rate formula
NUCLEON_MASS = PROTON_MASS

KEV = 1e3 * E_CHARGE  # J
MEV = 1e6 * E_CHARGE  # J
ANGSTROM = 1e-10  # m
FERMI = 1e-15  # m
DAY = 86400.0  # s

# Photon emission coefficient: dGamma/dE = BETA * N^2 * Na / (R0^3 * E)
BETA = (2.0 / 3.0) * G * E_CHARGE**2 / (math.pi**1.5 * EPSILON_0 * C_LIGHT**3)
