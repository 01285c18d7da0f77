"""Exact modular representation theory of truncated current Lie algebras.

The package constructs g_m = g ⊗ F_p[t]/(t^{m+1}) for g = sl_n or gl_n over
the prime field, builds reduced-enveloping-algebra modules explicitly, chops
them into composition series with a MeatAxe, and verifies closed multiplicity
and dimension formulas against those exact decompositions.
"""

from .algebra import AlgebraDescriptor, CurrentElement, LieContext, get_context

__all__ = ["AlgebraDescriptor", "CurrentElement", "LieContext", "get_context"]
__version__ = "0.1.0"
