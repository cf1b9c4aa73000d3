"""Insertion, jeu de taquin and growth diagrams for bumpless pipe dreams."""

from .biword import PlacticBiword, knuth_class, knuth_connected, knuth_neighbors
from .bpd import BpdGrid, Tile, identity_grid, rothe
from .growth import (
    GrowthDiagram,
    compatible_sequence,
    growth_by_insertion,
    growth_by_rules,
    insertion_grid,
    pipe_dream,
)
from .insertion import insert, insert_word
from .jdt import jdt_step, rect, reversed_jdt
from .perm import Permutation, decompose_decreasing

__version__ = "0.1.0"

__all__ = [
    "PlacticBiword", "knuth_class", "knuth_connected", "knuth_neighbors",
    "BpdGrid", "Tile", "identity_grid", "rothe",
    "GrowthDiagram", "compatible_sequence", "growth_by_insertion", "growth_by_rules",
    "insertion_grid", "pipe_dream",
    "insert", "insert_word", "jdt_step", "rect", "reversed_jdt",
    "Permutation", "decompose_decreasing",
]
