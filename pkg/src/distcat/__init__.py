"""distcat: executable verification that a category with finite
products, finite coproducts and exponentials is distributive, with the
isomorphisms constructed arrow by arrow and checked in decidable
instances (finite sets, finite Heyting algebras, and a free syntactic
category)."""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    BicartesianClosedCategory,
    CategoryError,
    ConstructionTrace,
    Iso,
    verify_iso,
)
from .finset import FinSet, FunTable, make_set  # noqa: F401
from .heyting import (  # noqa: F401
    FiniteLattice,
    HeytingCategory,
    build_divisor_lattice,
    build_downset_lattice,
    validate_heyting,
)
from .terms import FreeCategory, interpret, semantic_equal  # noqa: F401
