"""posethom: lattice cohomology of subcomplex homology functors.

Exact computation, over Z and over fields, of the cohomology of
functors from the subset lattice of {1..m} to abelian groups, built
from the homology of full subcomplexes of a finite simplicial complex.
This yields the double homology of the associated moment-angle complex
and the degree-zero uberhomology, and machine-verifies the comparison
results between them.
"""

from posethom.cochain import (
    CochainComplex, assemble, cone_acyclicity_check, epsilon,
    poset_cohomology,
)
from posethom.fields import GF, QQ
from posethom.functors import (
    BasedFunctor, NonFunctorialError, RegimeError, constant_functor,
    functor_A, functor_face, functor_H,
)
from posethom.homology import (
    BasedHomology, ChainComplexZ, HomologyEngine, InducedMap, chain_complex,
    reduced_cohomology,
)
from posethom.kernels import BACKEND as KERNEL_BACKEND
from posethom.linalg import (
    AbelianGroup, IntMatrix, SmithDecomposition, cohomology_at, rank_mod,
    smith, solve_integer,
)
from posethom.simplicial import (
    SimplicialComplex, cycle, enumerate_complexes, from_facets, from_json,
    generate, random_complex, simplex, skeleton,
)
from posethom.theories import (
    BigradedTable, PoincareSeries, double_homology, poincare_series,
    poset_table, theorem_A_check, theorem_B_check, uber_B,
)

__version__ = "0.1.0"
