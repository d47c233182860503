from .model import ETA, EXTERNAL, INTERNAL, THETA, Edge, JacobiDiagram, conjugate, flip_orientation, make_diagram
from .canonical import CanonicalForm, automorphism_count, canonical_form, diagram_from_key, isomorphic, oriented_key
from .structure import CycleStructure, StructureError, cycle_structure, has_yl_subgraph, reverse_cycle, reverse_vertex_orientation, symmetry_sign
from .generators import degree2_table, eta_cycle_diagram, gamma1, gamma2, gamma3, gamma4, gamma5, theta_wheel, wheel_diagram, y_pattern_demo, l_pattern_demo
from .enumerate import ResourceBoundError, class_counts, enumerate_connected, max_degree, oriented_representatives
