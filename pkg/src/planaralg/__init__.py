"""Exact computational planar algebra toolkit.

Subpackages cover the two-parameter Temperley-Lieb diagram algebra and its
decorated and Fuss-Catalan variants, spin- and vertex-model partition
functions with the Kauffman bracket and a four-spin triple-point model,
generalized Hadamard matrix invariants, principal-graph path algebras with
the Coxeter-Dynkin admissibility obstruction, and group planar algebra
dimensions.  The `planar` command exposes everything on the command line.
"""

__version__ = "0.1.0"
