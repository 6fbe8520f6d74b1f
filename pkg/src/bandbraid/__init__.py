"""Braid groups B_n in the band-generator presentation.

Parsing and rewriting of band-generator words, canonical factors (the
Catalan-many divisors of the fundamental word), the unique left-canonical
form solving the word problem, super-summit-set conjugacy invariants, and
a brute-force rewriting oracle used to verify all of it.
"""

from .errors import (
    BraidError,
    CapExceededError,
    NotCanonicalFactorError,
    ParseError,
)
from .words import (
    BandLetter,
    BraidWord,
    band_to_artin,
    delta_word,
    free_reduce,
    invert_word,
    parse_word,
    permutation_of,
    random_word,
    render_word,
    tau_shift,
)
from .factors import (
    CanonicalFactor,
    complement_set,
    delta_factor,
    enumerate_factors,
    from_cycles,
    from_permutation,
    identity_factor,
    left_complement,
    meet,
    obstructing_pair,
    parse_factor,
    render_factor,
    right_complement,
    starting_set,
    tau_factor,
    to_band_word,
)
from .normal import (
    NormalForm,
    equal,
    inf_sup,
    invert_normal_form,
    left_canonical_form,
    left_weight_pair,
    multiply,
    normal_form_word,
    render_normal_form,
    to_delta_positive,
)
from .conjugacy import (
    SuperSummitSet,
    are_conjugate,
    cycle_once,
    decycle_once,
    orbit_statistics,
    summit_representative,
    super_summit_set,
)
from .oracle import (
    EquivalenceClass,
    cancellation_check,
    closure,
    equal_via_oracle,
    positively_equivalent,
    relation_neighbors,
)

__version__ = "0.1.0"
