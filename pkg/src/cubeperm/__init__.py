"""Sign of the permutation of cubic residues induced by a primitive root.

For a prime p = 3n + 1 and primitive root g, the sequence g^3, g^6, ..., g^(3n)
mod p is a rearrangement of the ascending cubic residues; this package computes
its sign and audits the closed forms and lemmas around it against direct
enumeration.
"""

from .binform import (
    FormRepresentation,
    class_number,
    class_number_forms_oracle,
    normalize_rs,
    represent_4p,
    three_is_cube,
)
from .counts import CountsRecord, difference_counts, r_table, residue_counts
from .eisenstein import (
    CubicSymbolValue,
    EisensteinInt,
    choose_pi,
    cubic_symbol,
    divrem,
    omega_image,
    prime_above,
    primary_associate,
)
from .modular import cubic_residues_sorted, legendre_symbol, pow_mod, primitive_roots, sqrt_minus3
from .permsign import PermutationRecord, build_s_p, numerator_eval, permutation_sign, tau_sign
from .verify import PrimeContext, TheoremReport, audit_prime, audit_range, build_context, theorem_formula_sign

__version__ = "0.1.0"
