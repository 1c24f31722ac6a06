"""valspin - Spin(9)-invariant valuations on the octonionic plane.

This package computes exact so(2m+1) characters and decompositions, the
b-tables and dimensions of the spaces of Spin(9)-invariant valuations on
R^16, and checks curvature identities on the rank-one projective spaces.
"""

__version__ = "1.0.0"
