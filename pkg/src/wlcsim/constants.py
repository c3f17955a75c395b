"""Physical constants."""

C_LIGHT = 299_792_458.0  # speed of light in vacuum, m/s (exact)
