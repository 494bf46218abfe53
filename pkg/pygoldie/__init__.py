from .errors import (
    GoldieError,
    SizeError,
    DomainError,
    ConsistencyError,
    NumericFailure,
    TableauEmissionError,
)
from .symgroup import (
    Permutation,
    ParabolicShape,
    longest_element,
    all_permutations,
    min_coset_reps,
    max_coset_reps,
    parabolic_subgroup,
)
from .weights import Weight, CosetSplit, rho, act, antidominant_conjugate, coset_split, beta

# tableaux and rs import each other as modules and only look up names at call time
from .tableaux import Partition, ShiftMatrix, Pyramid, Tableau, partitions, q_pi
from .rs import (
    RSPair,
    LeftCell,
    schensted_insert,
    q_of_weight,
    rs_pair,
    inverse_rs,
    left_cells,
    standard_tableaux,
    minimal_cell_rep,
    cell_rep_of_tableau,
    recording_tableau,
    same_left_cell,
)
from .polynomials import MultiPoly, h_lambda, h_pi, weyl_dimension
from .kl import KLTable, KLStore, kl_polynomial, singular_inv_mult, tableau_inv_mult
from .goldie import (
    Goldie,
    GoldieReport,
    CosetFactor,
    enumerate_column_strict,
    goldie_poly_product,
    standard_module_dim,
)
from .onedim import StupInput, StupSolution, stup_solve, connected_tableau_of, theorem_pt_coordinates
