"""Sprague-Grundy values, optimal moves and P-positions for Nim, Moore's Nim,
Co-Nim and Exco-Nim, with a closed form for three or more main piles and a
laboratory for the two-pile case."""
from .cache import CacheError, load_cache, save_cache
from .closed_form import (
    ConstructionError, EtaRho, Kind, MooreSum, SgParams, bounds, construct_move_appendix,
    eta_rho, g_closed, interval_v, moore_sum, nim_sum, reachable_mu, sg_params, z_of,
)
from .engine import (
    AxiomReport, MemoryLimitError, ResourceLimitError, SgTable, best_move, fill_box,
    inconsistent_cells, mex, move_to_value, p_positions, sg_bruteforce, sg_table_n2,
    verify_sg_axioms,
)
from .game import (
    CoNim, ExcoNim, GameRules, MooreNim, Move, Position, StandardNim, canonical,
    is_legal_move, is_p_position_exco, is_terminal, legal_moves, move_violation, p_move,
    rules_from_token,
)
from .n2lab import (
    AtLeast, ConjectureReport, CoreSet, Exact, PeriodicityReport, SgAnswer, check_conjecture,
    conj1_predict, core_enumerate, delta_u, f_indicator, k_of, periodicity_detect, shift,
    sg_bounded, smallest_period, verify_core_reduction, verify_shift_lemma,
)

__version__ = "0.1.0"

__all__ = [
    'AtLeast', 'AxiomReport', 'CacheError', 'CoNim', 'ConjectureReport', 'ConstructionError',
    'CoreSet', 'EtaRho', 'Exact', 'ExcoNim', 'GameRules', 'Kind', 'MemoryLimitError',
    'MooreNim', 'MooreSum', 'Move', 'PeriodicityReport', 'Position', 'ResourceLimitError',
    'SgAnswer', 'SgParams', 'SgTable', 'StandardNim', 'best_move', 'bounds', 'canonical',
    'check_conjecture', 'conj1_predict', 'construct_move_appendix', 'core_enumerate', 'delta_u',
    'eta_rho', 'f_indicator', 'fill_box', 'g_closed', 'inconsistent_cells', 'interval_v',
    'is_legal_move', 'is_p_position_exco', 'is_terminal', 'k_of', 'legal_moves', 'load_cache',
    'mex', 'moore_sum', 'move_to_value', 'move_violation', 'nim_sum', 'p_move', 'p_positions',
    'periodicity_detect', 'reachable_mu', 'rules_from_token', 'save_cache', 'sg_bounded',
    'sg_bruteforce', 'sg_params', 'sg_table_n2', 'shift', 'smallest_period',
    'verify_core_reduction', 'verify_sg_axioms', 'verify_shift_lemma', 'z_of'
]
