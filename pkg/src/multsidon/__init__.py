"""Extremal multiplicative-Sidon-type set densities, computed exactly.

Two solved regimes:

* pairs 1 <= a < b: an explicit maximum-cardinality set inside [n] for
  every n, exact cardinality brackets and the exact maximum density
  b/(b + gcd(a, b));
* pairwise coprime triples 1 < a < b < c with the condition that
  a*x = b*y and a*x = c*y have no solutions in the set: a certified
  rational interval of any requested width around the maximum density.

All arithmetic is exact (arbitrary-precision integers and fractions);
independent brute-force and matching oracles live in multsidon.oracle.
"""

from .components import (
    ComponentId,
    Decomposition,
    GridComponent,
    TripleParams,
    TruncatedComponent,
    admissible_count,
    admissible_density,
    alpha_complete,
    classify_component,
    decompose,
    f_table,
    f_value,
    grid_component,
    parity_alpha,
    q_copy_alpha,
    render_component,
    truncate_component,
)
from .density import (
    ConvergenceEstimate,
    DensityInterval,
    approximate_density,
    beta,
    choose_cutoff,
    convergence_estimate,
    delta_complete,
    delta_small,
    exact_tail_within_simplified,
    tail_bound,
)
from .oracle import (
    ComponentInstance,
    ComponentSummary,
    FiniteGraphReport,
    VerificationError,
    build_gn,
    empirical_density,
    exact_alpha_exhaustive,
    exact_alpha_matching,
    finite_graph_report,
    is_general_multiplicative,
    staircase_lemma_check,
)
from .pair_sidon import (
    ExtremalPairSet,
    PairParams,
    PathDecomposition,
    SubpowerDecomposition,
    build_path_decomposition,
    cardinality_bounds,
    construct_extremal_set,
    coprime_singleton_density,
    is_pair_multiplicative,
    pair_density,
    path_alpha,
    reduce_pair,
    subpower_index,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
