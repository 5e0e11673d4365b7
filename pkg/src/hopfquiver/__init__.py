"""Exact link-quiver analysis of finite-dimensional Hopf algebras over cyclotomic fields."""

from .builders import (build_cdn, build_dual_group_algebra, build_group_algebra, build_h16, build_h32,
                       build_sweedler, build_taft, cyclic_group, symmetric_group_3)
from .classify import GroupDatum, extract_group_datum
from .coalgebra import Coalgebra
from .errors import HopfQuiverError
from .field import CycElem, FieldSpec
from .fileformat import dump, dumps, load
from .fusion import FusionTable, fusion_table
from .hopf import HopfAlgebra
from .quiver import LinkQuiver, Verdict, build_link_quiver, verdict
from .report import analyze
from .semisimple import simple_subcoalgebras

__all__ = [
    "Coalgebra", "CycElem", "FieldSpec", "FusionTable", "GroupDatum", "HopfAlgebra", "HopfQuiverError",
    "LinkQuiver", "Verdict", "analyze", "build_cdn", "build_dual_group_algebra", "build_group_algebra",
    "build_h16", "build_h32", "build_link_quiver", "build_sweedler", "build_taft", "cyclic_group", "dump",
    "dumps", "extract_group_datum", "fusion_table", "load", "simple_subcoalgebras", "symmetric_group_3",
    "verdict",
]
__version__ = "0.1.0"
