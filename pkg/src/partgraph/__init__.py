"""Partition graphs G_n: Ferrers-translation overlays, rooted motifs,
emergence thresholds and extremal local complexity."""

from .atlas import Zone, build_atlas, carrier_distribution, classify_zone, growth_profile, normalized_profile
from .config import Caps, get_caps, set_caps
from .errors import CapacityError, DomainError, InvariantViolation, PartGraphError, TemplateError
from .graph import LevelGraph, build_graph, degree_spectrum, export_graph
from .invariants import (
    ExtremalRecord,
    extremal_record,
    local_clique_number,
    local_clique_numbers,
    local_translation_check,
    monotonicity_check,
)
from .motifs import (
    Occurrence,
    RootedTemplate,
    TemplateRegistry,
    builtin_templates,
    canonical_bl1,
    canonical_br1,
    find_occurrences,
    load_template,
)
from .overlay import overlay_map, persistence_check, verify_induced_embedding
from .partitions import (
    Partition,
    column_growth,
    conjugate,
    enumerate_partitions,
    ferrers_translate,
    is_adjacent,
    l1_conjugate_distance,
    row_growth,
)
from .thresholds import ThresholdResult, extremal_threshold, motif_threshold

__version__ = "0.1.0"
