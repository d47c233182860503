from .config import Estimate, MCConfig
from .gauss import gauss_direction, sphere_volume
from .density import form_density, has_degenerate_gauss_pair
from .embeddings import StandardPlane, TentacleEmbedding, wheel_embedding
from .linking import hopf_pair, linking_estimate, separated_pair
from .phidiff import phi_difference_estimate
from .z2 import z2_estimate, z2_plane_estimate, z2_wheel_estimate
