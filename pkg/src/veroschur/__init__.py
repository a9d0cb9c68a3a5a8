"""Exact Schur-functor decompositions of plethysms and Veronese syzygies.

Everything is computed in exact integer or rational arithmetic.  The main
entry points are:

* :mod:`veroschur.characters` -- characters of tensor/symmetric/exterior
  powers of symmetric powers and their Schur decompositions,
* :mod:`veroschur.koszul` -- syzygy functors via per-weight Koszul ranks,
* :mod:`veroschur.cones` -- lattice-point counts on the two cone sections
  that govern complexity and total multiplicity,
* :mod:`veroschur.constructions` -- explicit subfunctor constructions and
  the ratio experiment harness,
* :mod:`veroschur.cli` -- the command line interface.
"""

from veroschur.config import CapExceeded, RunConfig

__all__ = ["CapExceeded", "RunConfig"]
__version__ = "0.1.0"
