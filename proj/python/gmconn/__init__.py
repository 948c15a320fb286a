"""Exact Gauss-Manin connection matrices for hyperplane arrangement degenerations.

Thin wrapper around the compiled module: every helper loads arrangement files
produced by / compatible with the ``gmconn`` command line tool and returns
plain dictionaries (matrix entries are strings holding exact rationals or
polynomials in the formal weights ``y1..yn``).
"""

import json

from . import _gmconn

__all__ = ["betti", "dep", "omega", "gm", "verify"]
__version__ = "0.1.0"


def betti(arrangement):
    """Betti numbers of the arrangement's Orlik-Solomon algebra."""
    return _gmconn.betti(str(arrangement))


def dep(arrangement):
    """Dependent sets, multiplicities, circuits and Betti numbers."""
    return json.loads(_gmconn.dep_json(str(arrangement)))


def omega(base, degenerate):
    """Formal and induced endomorphisms of a degeneration pair.

    Matrices are keyed by degree and written with rows indexing the domain.
    """
    return json.loads(_gmconn.omega_json(str(base), str(degenerate)))


def gm(base, degenerate, weights, degree=-1):
    """Connection matrix of the pair at rational weights (csv string)."""
    return json.loads(_gmconn.gm_json(str(base), str(degenerate), weights, degree))


def verify(base, degenerate):
    """Covering conditions and endomorphism certificates for a pair."""
    return json.loads(_gmconn.verify_json(str(base), str(degenerate)))
