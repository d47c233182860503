from .vectors import DiagramVector
from .relations import KINDS, Relation, RelationSet, relation_vectors
from .weights import ReductionError, weight_antisymmetry_check, weight_of_vector, weight_w
from .quotient import RowSpace, in_relation_span, quotient_dimension, relation_span
from .derived import DERIVED_KINDS, DerivedReport, derived_relation_check
from .zcomb import z_combination
