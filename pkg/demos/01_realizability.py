"""
Which region data can occur?
============================

Color the complement of an immersed closed surface in S^3 black and white.
Count black regions by Euler characteristic (``a_k`` regions with
``chi = 1 - k``), white ones likewise (``b_k``), and record ``chi(F)`` and
the number ``N`` of triple points.  Data occurs exactly when both spectra
are nonempty, ``chi <= 2``, ``N >= 0`` and both weighted sums equal
``(chi + N) / 2``.
"""

from immregions import ImmersionData, RegionSpectrum, euler_of_image, is_realizable, weighted_sum
from immregions.planner import explain

# Spectra are sparse: only nonzero counts are stored.
black = RegionSpectrum({0: 1, 2: 1})
print(black, "weighted sum", weighted_sum(black))

# Boy's surface: one 3-cell of each color, one triple point, chi = 1.
boy = ImmersionData.of({0: 1}, {0: 1}, 1, 1)
print(boy, "realizable:", is_realizable(boy))

# The Euler characteristic of the image surface is chi(F) + N.
print("chi of the image:", euler_of_image(boy))

# A sphere cannot have a single triple point: 2 * 1 != 2 + 1.
bad = ImmersionData.of({0: 1}, {0: 1}, 2, 1)
print(bad, "realizable:", is_realizable(bad))
print("why not:", explain(bad).message)

# Swapping colors never changes the verdict.
d = ImmersionData.of({3: 1}, {2: 2}, -4, 0)
print(d, is_realizable(d), "| swapped:", is_realizable(d.swapped()))
