"""Character degree graphs of finite groups built from SL2 module actions."""

from .chardeg import character_degrees, degree_multiset, sl2_degrees_closed_form
from .groupcore import (
    CeilingExceeded,
    DEFAULT_CEILING,
    FiniteGroup,
    ModuleAction,
    centralizer_order,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    extraspecial_group,
    group_from_spec,
    module_catalog,
    quaternion_group,
    semidirect,
    sl2_group,
    sylow2_subgroups_sl2,
    sylow_normalizer_count,
)
from .prime_graph import (
    Graph,
    complete_vertices,
    components,
    cut_vertices,
    graph_from_degrees,
)

__all__ = [
    "CeilingExceeded",
    "DEFAULT_CEILING",
    "FiniteGroup",
    "Graph",
    "ModuleAction",
    "centralizer_order",
    "character_degrees",
    "complete_vertices",
    "components",
    "conjugacy_classes",
    "cut_vertices",
    "cyclic_group",
    "degree_multiset",
    "direct_product",
    "extraspecial_group",
    "graph_from_degrees",
    "group_from_spec",
    "module_catalog",
    "quaternion_group",
    "semidirect",
    "sl2_degrees_closed_form",
    "sl2_group",
    "sylow2_subgroups_sl2",
    "sylow_normalizer_count",
]

__version__ = "0.1.0"
