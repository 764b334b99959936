"""symcart: arithmetic of intermediate-Ricci thresholds and homotopy
recognition for compact symmetric spaces.

The package computes, for irreducible simply-connected compact symmetric
spaces, the threshold k_P (smallest k with positive k-th intermediate Ricci
curvature), the minimal isotropy-orbit dimension d_P = dim - k_P, the
codimension budget C_P = d_P/2 - 4, and connectivity numbers of submanifold
inclusions.  On top of a database of homotopy groups through degree 10 it
recognizes Cartan types of products of symmetric spaces from their
homotopy-group profiles through degree 9.
"""

__version__ = "0.1.0"
