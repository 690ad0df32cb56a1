"""Jones polynomials at t = i, three independent ways.

* :mod:`mjones.braidlang` - braid words and closure invariants
* :mod:`mjones.anyon_core` - Ising-anyon braid matrices and amplitudes
* :mod:`mjones.kauffman_oracle` - exact bracket state sum (classical oracle)
* :mod:`mjones.spin_sim` - ten-qubit imaginary-time braiding replay
* :mod:`mjones.tomography` - Pauli-basis state/process decompositions
* :mod:`mjones.verify` - cross-validation suite behind ``mjones verify``
"""

from .braidlang import (
    ArfData,
    BraidSyntaxError,
    BraidWord,
    LinkInvariants,
    arf_invariant,
    c2_pair,
    closure_permutation,
    format_braid,
    jones_from_arf,
    link_invariants,
    parse_braid,
)
from .anyon_core import (
    AnyonBasis,
    JonesValue,
    braid_generators,
    evolve,
    jones_majorana_abs,
    jones_su2_2,
    vacuum_amplitude,
)
from .kauffman_oracle import (
    A_AT_T_I,
    CapacityError,
    LaurentPolynomial,
    bracket,
    eval_at,
    jones_at_i,
    jones_polynomial,
)
from .pauli import PauliTerm
from .spin_sim import (
    GroundBasis,
    Hamiltonian,
    MajoranaOperator,
    basis_rotation,
    braid_sequence,
    cooling_step,
    extract_braid_matrix,
    fermionic_hamiltonian,
    ground_basis,
    ite_apply,
    jones_spin_abs,
    logical_decode,
    logical_encode,
    majorana,
    prepare_logical,
    spin_hamiltonian,
)
from .tomography import ChiMatrix, chi_from_unitary, density_matrix, pauli_coefficients, state_fidelity

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
