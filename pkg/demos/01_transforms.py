"""Tour of the transform API: fast kernels, oracle, inverse, DFT bridge.

Run:  python demos/01_transforms.py
"""

import numpy as np

from mindht import (
    dht_to_dft,
    fast_dht,
    naive_dft,
    naive_dht,
    naive_idht,
)

np.set_printoptions(precision=4, suppress=True)

# The discrete Hartley transform is real-to-real.  The fast kernels cover the
# four block lengths 4, 8, 12, 24; the naive path works for any length.
v = np.array([1.0, 2.0, 3.0, 4.0])
print("signal          ", v)
print("fast DHT        ", fast_dht(v))
print("naive DHT       ", naive_dht(v))

# The transform is an involution: applying it twice returns N times the input,
# so the inverse is one more forward pass and a division.
V = fast_dht(v)
print("inverse         ", naive_idht(V))
print("double transform", fast_dht(V) / len(v), "(= input)")

# Fast and naive paths agree to rounding at every supported length.
rng = np.random.default_rng(0)
for n in (4, 8, 12, 24):
    x = rng.uniform(-1, 1, n)
    err = np.max(np.abs(fast_dht(x) - naive_dht(x)))
    print(f"N={n:2d}: max |fast - naive| = {err:.2e}")

# A Hartley spectrum converts to the DFT spectrum with two additions and a
# halving per bin - so a fast DHT is also a fast DFT for real input.
U_via_hartley = dht_to_dft(fast_dht(v))
print("DFT via Hartley ", U_via_hartley)
print("DFT direct      ", naive_dft(v))
