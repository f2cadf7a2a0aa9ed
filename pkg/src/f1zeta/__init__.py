"""Monoid schemes over the field with one element: point counts, zeta functions, K-theory."""

from .abelian import FgAbelianGroup, IntMatrix, hom_count_cyclic, smith_normal_form
from .monoid import FiniteMonoid, Presentation, SplitMonoid, saturate
from .scheme import F1Scheme, glue, proj_space, zoo
from .zeta import exact_count, zeta_factored, zeta_polynomial

__version__ = "0.1.0"
