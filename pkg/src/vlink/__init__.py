"""Virtual link diagrams as signed Gauss codes: Carter surface genus,
colouring parities and their projection, double-cover lifts, Reidemeister
moves with colouring transport, and diagram invariants."""
from .carter import GenusReport, build_ribbon_graph, genus, surface_signature, trace_faces
from .cover import build_double_cover, preferred_lift, verify_lift_oracle
from .gauss import (
    Diagram,
    EdgeId,
    Entry,
    GaussCodeSyntaxError,
    InvalidDiagramError,
    UnknownCrossingError,
    canonical_code,
    change_crossings,
    crossing_change,
    parse,
    serialize,
    subdiagram,
    validate,
)
from .generate import all_diagrams, random_colouring, random_diagram
from .invariants import (
    AscendingContext,
    CapExceededError,
    ascending_number,
    ascending_number_oracle,
    bridge_count,
    min_genus_subdiagram,
    warping_degree,
)
from .moves import MoveError, MoveEvent, MoveKind, apply_move, available_moves, check_axioms
from .parity import (
    Colouring,
    DomainError,
    InadmissibleError,
    Weighting,
    admissible_weightings,
    crossing_parity,
    enumerate_colourings,
    is_admissible,
    parity_map,
    project,
    project_colouring,
)

__version__ = "0.1.0"
