"""Exact sum-product and incidence experiments over dual and double numbers.

Thin re-export of the compiled module; numbers are exact strings like
"1+2e" (dual) or "3/2-1/2j" (double), rationals are "p/q" strings.
"""

try:
    from planarnum._planarnum import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _planarnum import *  # noqa: F401,F403  (build-tree layout)
