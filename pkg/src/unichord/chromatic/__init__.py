"""Admissible pairs, third colours, optimal colouring and maximum clique."""

from .coloring import Coloring, NotInCError, max_clique, optimal_coloring
from .pairs import AdmissiblePair, admissible_pairs, classify_pair
from .thirdcolor import (
    ThirdColor,
    strong_third_color_basic,
    strong_third_color_type2,
    third_color,
    third_color_petersen,
)
