"""Frozen reference values from the standalone double-exponential oracle.

These numbers were produced by ``tests/de_oracle.py`` (a fixed-grid
tanh-sinh / exp-sinh integrator sharing no code with the package) before
the package internals were written, at two grid resolutions differing by
a factor of two; the resolutions agree with each other to better than
5e-12 relative on every entry, so the digits below are trustworthy well
past the 1e-6 comparisons made in the tests.  Regenerate by running
``python3 tests/de_oracle.py``.

Keys are (omega_p * a, z / a) at zero temperature; values are in 1/a**4
units.
"""

ORACLE = {
    (10.0, 0.25): {
        "energy_density": +7.640236473165863e-01,
        "pressure_xx": +3.951648788988368e-01,
        "pressure_zz": -2.630611048108713e-02,
        "mean_sq_E": +3.106204213409087e+00,
        "mean_sq_B": -1.578156918775916e+00,
        "nec_transverse": +1.159188526217357e+00,
        "nec_longitudinal": +7.377175368366332e-01,
    },
    (10.0, 0.5): {
        "energy_density": +6.863786667548240e-02,
        "pressure_xx": +4.747198857828476e-02,
        "pressure_zz": -2.630611048108713e-02,
        "mean_sq_E": +4.649305696414145e-01,
        "mean_sq_B": -3.276548362904496e-01,
        "nec_transverse": +1.161098552541480e-01,
        "nec_longitudinal": +4.233175619449343e-02,
    },
    (100.0, 0.25): {
        "energy_density": +1.733633843831654e-01,
        "pressure_xx": +1.061943508273184e-01,
        "pressure_zz": -3.902531727147146e-02,
        "mean_sq_E": +4.630561206574904e+00,
        "mean_sq_B": -4.283834437808572e+00,
        "nec_transverse": +2.795577352108898e-01,
        "nec_longitudinal": +1.343380671117732e-01,
    },
    (100.0, 0.5): {
        "energy_density": -4.390214255384217e-04,
        "pressure_xx": +1.929314792296651e-02,
        "pressure_zz": -3.902531727147146e-02,
        "mean_sq_E": +5.849479631209893e-01,
        "mean_sq_B": -5.858260059720664e-01,
        "nec_transverse": +1.885412649754463e-02,
        "nec_longitudinal": -3.946433869712363e-02,
    },
}
