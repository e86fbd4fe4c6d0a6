"""rdcx: regular directed complexes at desk scale.

Construction and recognition of pasting-diagram shapes (molecules), graded
boundaries, layerings and flow graphs, the acyclicity hierarchy, the
ω-category of molecules over a complex, linearisation to augmented directed
chain complexes with Steiner classification, and the stability operations
(pasting, suspension, Gray product, join, duals).
"""

from .core import (
    El,
    MINUS,
    PLUS,
    CompositionError,
    FormatError,
    MapReport,
    OgMap,
    OgPoset,
    StructureError,
    Subset,
    augment,
    boundary,
    closure,
    cofaces,
    diminish,
    faces,
    find_isos,
    identity,
    image,
    is_inclusion,
    is_oriented_thin,
    oriented_hasse,
    validate_morphism,
)
from .graphs import DirectedGraph
from .molecule import (
    Molecule,
    as_molecule,
    atom,
    is_atom,
    is_globular,
    is_molecule,
    is_regular_directed_complex,
    is_round,
    paste,
    point,
    rebuild,
    recognise,
    submolecules,
    unique_molecule_iso,
)
from .flows import (
    Layering,
    extended_flow_graph,
    flow_graph,
    frame_dim,
    layering_dim,
    layerings,
    max_flow_graph,
    ordering_of,
    orderings,
)
from .acyclicity import (
    classify,
    has_frame_acyclic_molecules,
    is_acyclic,
    is_dw_acyclic,
    is_frame_acyclic,
    is_strongly_dw_acyclic,
)
from .constructions import dual, gray, gray_el, join, join_el, suspension, suspend_el, total_dual
from .omegacat import (
    Cell,
    CellSet,
    atom_cell,
    cell_boundary,
    compose,
    enumerate_cells,
    factor_into_atoms,
    generating_atoms,
    subset_cell,
)
from .chain import (
    ADC,
    GlobularTable,
    adc_flow_graph,
    adc_hasse,
    basis_table,
    cell_table,
    compare_molec_nu,
    is_globular_table,
    is_steiner,
    is_strong_steiner,
    is_unital_basis,
    linearize,
    molecule_table,
    nu_boundary,
    nu_compose,
)
from .io import dump_diagram, load_diagram, to_dot, witness_from_dict, witness_to_dict
from .generate import MoleculeSampler, random_molecules

__version__ = "0.1.0"
