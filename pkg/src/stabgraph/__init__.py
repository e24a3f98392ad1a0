"""Binary symplectic stabilizer toolkit.

Graph states, local complementation orbits, reduction of stabilizers to
graph-state standard form, decomposition of local Clifford actions into
complementation sequences, and an equivalence solver, all over bit-packed
GF(2) linear algebra with an independent dense statevector oracle.
"""

from .clifford import (
    GraphDomainReport,
    InvalidCliffordError,
    LocalCliffordOp,
    complete_from_cd,
    compose,
    graph_action,
    local_complement_op,
)
from .decomposition import (
    InvertibleCDForm,
    LCSequence,
    NotInDomainError,
    Single,
    Triple,
    apply_sequence,
    cd_step,
    decompose_action,
    reduce_to_identity,
)
from .equivalence import (
    Equivalent,
    Indeterminate,
    Inequivalent,
    test_equivalence,
    test_equivalence_graphs,
)
from .gf2 import BitMatrix, BitVec, SingularError, SymplecticForm
from .graphs import (
    Graph,
    complement,
    induced_subgraph,
    local_complement,
    local_complement_matrix_form,
    neighborhood,
)
from .orbit import CapExceededError, Orbit, canonical_form, enumerate_orbit, same_orbit
from .reduction import ReductionWitness, to_graph_state, verify_witness
from .stabilizer import (
    PauliString,
    StabilizerGenMatrix,
    basis_change,
    from_graph,
    from_pauli_strings,
    random_stabilizer,
    same_subspace,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVec",
    "CapExceededError",
    "Equivalent",
    "Graph",
    "GraphDomainReport",
    "Indeterminate",
    "Inequivalent",
    "InvalidCliffordError",
    "InvertibleCDForm",
    "LCSequence",
    "LocalCliffordOp",
    "NotInDomainError",
    "Orbit",
    "PauliString",
    "ReductionWitness",
    "Single",
    "SingularError",
    "StabilizerGenMatrix",
    "SymplecticForm",
    "Triple",
    "apply_sequence",
    "basis_change",
    "canonical_form",
    "cd_step",
    "complement",
    "complete_from_cd",
    "compose",
    "decompose_action",
    "enumerate_orbit",
    "from_graph",
    "from_pauli_strings",
    "graph_action",
    "induced_subgraph",
    "local_complement",
    "local_complement_matrix_form",
    "local_complement_op",
    "neighborhood",
    "random_stabilizer",
    "reduce_to_identity",
    "same_orbit",
    "same_subspace",
    "test_equivalence",
    "test_equivalence_graphs",
    "to_graph_state",
    "verify_witness",
]
