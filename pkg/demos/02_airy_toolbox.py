#!/usr/bin/env python3
"""The complex Airy kernel that powers the reflected-wave computation.

Shows the constant Wronskian W = A Ai' - A' Ai (with A(z) = Ai(omega z))
holding across the complex plane, the accuracy law of the large-argument
form, and the logarithmic derivative Ai'/Ai on the ray arg z = -pi/3 where
the amplitude integrals evaluate it.
"""

import numpy as np

from grazebeam import airy

print("constant Wronskian, exact value (omega - 1)/(2 pi sqrt 3):")
print("  W(0)      = %s" % airy.wronskian(0.0))
for z in (2.0 - 1.0j, -3.0, -4.0 + 4.0j, 6.0 + 5.0j):
    dev = abs(airy.wronskian(z) - airy.WRONSKIAN_ZERO)
    print("  |W(%s) - W(0)| = %.2e" % (z, dev))

print("\nlarge-argument form: relative error times z^{3/2} (bounded by u_1*3/2):")
for x in (10.0, 20.0, 40.0):
    rel = abs(airy.airy_ai(x).value - airy.airy_asymptotic(x, 0)) \
        / abs(airy.airy_ai(x).value)
    print("  z=%4.0f  rel=%.3e  rel*z^{3/2}=%.4f" % (x, rel, rel*x**1.5))

print("\ncorrection series sharpens the estimate at z = 6:")
ref = airy.airy_ai(6.0).value
for order in (0, 1, 2, 3):
    err = abs(airy.airy_asymptotic(6.0, order) - ref)/abs(ref)
    print("  order %d  rel error %.3e" % (order, err))

print("\nAi'/Ai on the evaluation ray arg z = -pi/3:")
for r in (1.0, 4.0, 9.0, 25.0, 100.0):
    z = r*np.exp(-1j*np.pi/3)
    val = airy.airy_ratio(z)
    lead = -np.sqrt(z)
    print("  |z|=%6.1f  ratio=%+.4f%+.4fj  vs -sqrt(z): %.2e rel"
          % (r, val.real, val.imag, abs(val - lead)/abs(val)))
