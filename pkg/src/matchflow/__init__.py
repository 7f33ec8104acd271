"""Count k-matchings and the Hosoya index of graphs glued together over vertex pairs.

The transfer-matrix pipeline lives in :mod:`matchflow.transfer` and
:mod:`matchflow.chain`; :mod:`matchflow.oracle` counts matchings directly and
serves as the independent check.
"""
from .chain import Block, Chain, evaluate, hosoya_of_chain, load_chain, realize, validate
from .errors import MatchflowError
from .graph import Graph, components, delete_vertices, neighbor_partition, union_glue
from .oracle import KVector, hosoya, k_vector_direct, match_series, match_series_naive
from .series import CoeffSeries, shift, trunc_mul
from .transfer import AttachProfile, TransferMatrix, apply, build_transfer, compose

__version__ = "0.1.0"

__all__ = [
    "AttachProfile",
    "Block",
    "Chain",
    "CoeffSeries",
    "Graph",
    "KVector",
    "MatchflowError",
    "TransferMatrix",
    "apply",
    "build_transfer",
    "components",
    "compose",
    "delete_vertices",
    "evaluate",
    "hosoya",
    "hosoya_of_chain",
    "k_vector_direct",
    "load_chain",
    "match_series",
    "match_series_naive",
    "neighbor_partition",
    "realize",
    "shift",
    "trunc_mul",
    "union_glue",
    "validate",
]
