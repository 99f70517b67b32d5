"""Special weights and special roots of finite Lie algebras, in exact arithmetic."""

from .lie import (
    CartanData,
    LieType,
    RootVector,
    WeightVector,
    build_cartan,
    cartan_data,
    fundamental_weight,
    pairing,
    simple_root,
    sym_product,
    to_labels,
    to_root_coords,
    weight_to_root,
)
from .rootsys import RootSystem, generate_positive_roots
from .weyl import (
    EnumerationCapError,
    WeylGroup,
    WeylWord,
    apply_word,
    enumerate_group,
    group_order,
    orbit,
    reflect,
)

__version__ = "0.1.0"
