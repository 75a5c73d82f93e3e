"""Exact computations with cocommutative Hopf algebras over the rationals."""

from .constructors import (
    DEFAULT_DEGREE,
    FiniteGroup,
    HopfAction,
    LieAlgebra,
    StructuralPresentation,
    enveloping,
    group_algebra,
    pbw_straighten,
    smash,
    validate_action,
)
from .core import (
    DegreeOverflow,
    Element,
    HopfError,
    HopfPresentation,
    OwnershipError,
    TablePresentation,
    TensorElement,
    TruncationError,
    UnsupportedKind,
    ValidationError,
    Verdict,
    antipode,
    check_hopf_axioms,
    comultiply,
    counit,
    multiply,
    tensor,
)
from .exactlin import NoSolution, SparseMatrix, Subspace, nullspace, rref, solve
from .exactness import (
    SSFL,
    SURJECTIVITY,
    SplitSESMorphismDiagram,
    check_ses,
    check_split_diagram,
    factorize,
    hcokernel,
    hereditary_check,
    hkernel,
    zero_morphism_search,
)
from .functors import SplitSES, decompose, grouplikes, induced_pair, primitives
from .morphisms import (
    HopfMorphism,
    analyze,
    apply,
    compose,
    identity_morphism,
    make_morphism,
    zero_morphism,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
