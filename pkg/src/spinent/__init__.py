"""Entanglement of pure multi-qudit states from maximal spin expectation values.

Quick start::

    >>> from spinent import parse_state, entanglement
    >>> round(entanglement(parse_state("1/2|00> + sqrt(3)/2|11>")).E, 12)
    0.5
"""

__version__ = "0.1.0"

from .errors import (
    InvalidStateError,
    NormalizationWarning,
    NumericError,
    SiteIndexError,
    SpinEntError,
    StateParseError,
    UnsupportedStateError,
)
from .state import (
    BasisComponent,
    ProductCheck,
    PureState,
    basis_state,
    components,
    is_factorable_site,
    permute_sites,
    product_check,
    random_state,
    reduced_density,
    render,
    tensor_product,
)
from .parsing import parse_state
from .spin import (
    Direction,
    SpinObservable,
    eigenvalue_of_digit,
    embed_at_site,
    spin_direction_matrix,
    spin_matrices,
)
from .expectation import (
    MaxExpectation,
    SampleResult,
    expectation_at,
    expectation_full,
    find_eigen_direction,
    max_expectation,
    max_expectation_analytic,
    max_expectation_grid,
    sample_measurements,
    spin_vector,
)
from .measure import (
    MeasureReport,
    SiteProfile,
    SiteResult,
    entanglement,
    gamma,
    qubit_gamma,
    site_profile,
)
from .corpus import BUILTIN_CORPUS, CorpusEntry, CorpusVerdict, corpus_verify, load_corpus
