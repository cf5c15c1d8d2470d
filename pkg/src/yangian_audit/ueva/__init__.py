"""The completed enveloping algebra of the W-algebra and the map from the
twisted affine Yangian into it."""
from .modes import *  # noqa: F401,F403
from .modes import __all__ as _modes
from .phi import (PHI_N, UModel, UncoveredIndex, a_elem, abc_elem, b_elem, c_elem, named_image,
                  phi_assignment, phi_image, t_claim, t_diff, t_elem)
from .verify import DEFAULT_TRUNCATE, REL_IDS, Identity, identities, identity_ids, verify_phi

__all__ = list(_modes) + [
    "PHI_N", "UModel", "UncoveredIndex", "a_elem", "abc_elem", "b_elem", "c_elem", "named_image",
    "phi_assignment", "phi_image", "t_claim", "t_diff", "t_elem", "DEFAULT_TRUNCATE", "REL_IDS",
    "Identity", "identities", "identity_ids", "verify_phi",
]
