"""permlab: a laboratory for approximating normalized permanents.

Sub-packages:

* :mod:`permlab.numerics` - matrices, column statistics, extended reals
* :mod:`permlab.permanent` - exact permanents and elementary symmetric polynomials
* :mod:`permlab.approximants` - the H_1, H_2 and H_l approximants
* :mod:`permlab.identities` - exact checkers for the error expansions
* :mod:`permlab.bounds` - matrix statistics and error bounds
* :mod:`permlab.families` - derangement, menage and seeded random matrices
* :mod:`permlab.cli` - the ``permlab`` command line
"""

__version__ = "0.1.0"
