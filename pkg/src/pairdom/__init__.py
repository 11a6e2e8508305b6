"""Paired domination on trees: linear solver, exact oracle, random-tree
samplers, limiting constants and Monte-Carlo normality checks."""

from ._kernels import USING_NUMBA
from .constants import LimitConstants, evaluate_pgf, fixed_point_map, solve_system
from .domination import (
    PDResult,
    build_fixtures,
    gamma_from_labels,
    gamma_pr_bruteforce,
    gamma_pr_linear,
    label_recursive,
    phi_from_labels,
    verify_pd_set,
)
from .offspring import (
    BUILTIN_MODELS,
    OffspringDistribution,
    binary_offspring,
    custom_offspring,
    get_distribution,
    labelled_offspring,
    load_pmf_file,
    plane_offspring,
)
from .sampling import (
    SeededRng,
    sample_cayley_uniform,
    sample_conditioned,
    sample_unconditioned,
)
from .simulate import (
    NormalityReport,
    SimSummary,
    normality_diagnostics,
    run_simulation,
    summarize,
)
from .trees import (
    DegreeSequence,
    RootedTree,
    bfs_canonicalize,
    from_lukasiewicz,
    from_parent_array,
    from_pruefer,
    iter_lukasiewicz_sequences,
    lukasiewicz_of,
    parse,
    path_tree,
    serialize,
    star_tree,
)

__version__ = "0.1.0"

__all__ = [
    "USING_NUMBA",
    "LimitConstants",
    "evaluate_pgf",
    "fixed_point_map",
    "solve_system",
    "PDResult",
    "build_fixtures",
    "gamma_from_labels",
    "gamma_pr_bruteforce",
    "gamma_pr_linear",
    "label_recursive",
    "phi_from_labels",
    "verify_pd_set",
    "BUILTIN_MODELS",
    "OffspringDistribution",
    "binary_offspring",
    "custom_offspring",
    "get_distribution",
    "labelled_offspring",
    "load_pmf_file",
    "plane_offspring",
    "SeededRng",
    "sample_cayley_uniform",
    "sample_conditioned",
    "sample_unconditioned",
    "NormalityReport",
    "SimSummary",
    "normality_diagnostics",
    "run_simulation",
    "summarize",
    "DegreeSequence",
    "RootedTree",
    "bfs_canonicalize",
    "from_lukasiewicz",
    "from_parent_array",
    "from_pruefer",
    "iter_lukasiewicz_sequences",
    "lukasiewicz_of",
    "parse",
    "path_tree",
    "serialize",
    "star_tree",
]
