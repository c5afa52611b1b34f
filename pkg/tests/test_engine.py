import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from exconim.engine import (
    MemoryLimitError, ResourceLimitError, SgTable, best_move, fill_box, inconsistent_cells, mex,
    move_to_value, p_positions, sg_bruteforce, sg_table_n2, verify_sg_axioms,
)
from exconim.game import CoNim, ExcoNim, MooreNim, Position, StandardNim, is_legal_move, legal_moves


def P(*c):
    return Position.of(*c)


def naive_sg(rules, pos, memo=None):
    """Recursive mex over explicit move lists, no tables."""
    memo = {} if memo is None else memo
    if pos.coords not in memo:
        seen = {naive_sg(rules, d, memo) for d in legal_moves(rules, pos)}
        memo[pos.coords] = next(v for v in itertools.count() if v not in seen)
    return memo[pos.coords]


class TestMex:
    @pytest.mark.parametrize("values,expected", [((), 0), ((0, 1, 3), 2), ((1, 2), 0), ((0, 0, 1), 2)])
    def test_examples(self, values, expected):
        assert mex(values) == expected

    @given(st.sets(st.integers(0, 40)))
    def test_definition(self, values):
        m = mex(values)
        assert m not in values and all(v in values for v in range(m)) and m <= len(values)


class TestBruteForce:
    def test_nim_example(self):
        assert sg_bruteforce(StandardNim(2), P(0, 3, 5)) == 6

    @pytest.mark.parametrize("coords,g", [((1, 1, 2), 4), ((2, 1, 3), 6)])
    def test_exco_examples(self, coords, g):
        assert sg_bruteforce(ExcoNim(2), P(*coords)) == g

    @pytest.mark.parametrize("rules,box", [
        (ExcoNim(2), (2, 3, 4)), (ExcoNim(3), (1, 2, 2, 3)), (MooreNim(3, 2), (0, 3, 2, 3)),
        (StandardNim(3), (0, 3, 3, 2)), (CoNim(3), (0, 2, 3, 3)),
    ])
    def test_matches_naive_recursion(self, rules, box):
        memo = {}
        table = fill_box(SgTable.empty(rules, box), generic=True)
        for c in itertools.product(*(range(b + 1) for b in box)):
            assert table.values[c] == naive_sg(rules, Position.of(*c), memo)

    def test_memo_extended_and_idempotent(self):
        memo = SgTable.empty(ExcoNim(2))
        assert sg_bruteforce(ExcoNim(2), P(1, 2, 3), memo) == 6
        assert memo.box == (1, 2, 3) and memo.complete
        before = memo.values.copy()
        assert sg_bruteforce(ExcoNim(2), P(1, 2, 3), memo) == 6
        assert np.array_equal(before, memo.values)
        assert sg_bruteforce(ExcoNim(2), P(2, 1, 1), memo) == sg_bruteforce(ExcoNim(2), P(2, 1, 1))

    def test_memo_rules_must_match(self):
        with pytest.raises(ValueError):
            sg_bruteforce(ExcoNim(2), P(0, 1, 1), SgTable.empty(CoNim(2)))

    def test_visit_limit(self):
        memo = SgTable.empty(ExcoNim(3), visit_limit=1000)
        with pytest.raises(ResourceLimitError, match="visit limit"):
            sg_bruteforce(ExcoNim(3), P(5, 5, 5, 5), memo)

    def test_bouton(self):
        table = fill_box(SgTable.empty(StandardNim(3), (0, 6, 6, 6)))
        for c in itertools.product(range(1), range(7), range(7), range(7)):
            assert table.values[c] == c[1] ^ c[2] ^ c[3]


class TestTwoPileTable:
    def test_examples(self):
        assert sg_table_n2(1, 2, 3)[(1, 2, 3)] == 6
        assert sg_table_n2(0, 9, 10)[(0, 9, 10)] == 3

    def test_x0_zero_row_is_xor(self, table_small):
        x1, x2 = np.indices(table_small.values.shape[1:])
        assert np.array_equal(table_small.values[0], x1 ^ x2)

    def test_equals_generic_builder(self):
        fast = sg_table_n2(3, 12, 20)
        slow = fill_box(SgTable.empty(ExcoNim(2), (3, 12, 20)), generic=True)
        assert fast.equals(slow)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 3), st.integers(0, 9), st.integers(0, 9))
    def test_random_boxes_match_generic(self, a, b, c):
        fast = sg_table_n2(a, b, c)
        slow = fill_box(SgTable.empty(ExcoNim(2), (a, b, c)), generic=True)
        assert fast.equals(slow)

    def test_self_consistent(self, table_3_32_512):
        assert inconsistent_cells(table_3_32_512) == []

    def test_memory_limit(self):
        with pytest.raises(MemoryLimitError):
            sg_table_n2(100, 1000, 1000, cell_limit=10**6)

    def test_deterministic(self):
        assert sg_table_n2(2, 9, 30).values.tobytes() == sg_table_n2(2, 9, 30).values.tobytes()

    def test_strictly_increasing_in_x0(self, table_small):
        assert (np.diff(table_small.values, axis=0) > 0).all()

    def test_bounds(self, table_small):
        x0, x1, x2 = np.indices(table_small.values.shape)
        g = table_small.values
        assert ((x0 + (x1 ^ x2) <= g) & (g <= x0 + x1 + x2)).all()


class TestInconsistency:
    def test_detects_corruption_n2(self):
        table = sg_table_n2(2, 5, 5)
        table.values[1, 2, 3] += 1
        assert (1, 2, 3) in inconsistent_cells(table)

    def test_detects_wild_value(self):
        table = sg_table_n2(2, 5, 5)
        table.values[1, 1, 1] = 99
        assert inconsistent_cells(table) == [(1, 1, 1)]

    def test_detects_corruption_generic(self):
        table = fill_box(SgTable.empty(ExcoNim(3), (1, 2, 2, 2)))
        table.values[1, 1, 1, 2] = 0
        assert (1, 1, 1, 2) in inconsistent_cells(table)


class TestMoves:
    def test_best_move_examples(self):
        assert best_move(ExcoNim(2), P(1, 2, 2)).target == P(0, 2, 2)
        assert best_move(ExcoNim(2), P(0, 5, 5)) is None
        assert best_move(StandardNim(3), P(0, 3, 5, 6)) is None

    def test_best_move_is_first_zero(self):
        rules = MooreNim(3, 2)
        src = P(0, 3, 5, 6)
        table = fill_box(SgTable.empty(rules, src.coords))
        zeros = [d for d in legal_moves(rules, src) if table[d] == 0]
        assert best_move(rules, src).target == zeros[0]

    def test_move_to_value(self):
        table = SgTable.empty(ExcoNim(2))
        mv = move_to_value(ExcoNim(2), P(1, 1, 2), 0, table)
        assert table[mv.target] == 0
        mv = move_to_value(ExcoNim(2), P(1, 1, 2), 3, table)
        assert is_legal_move(ExcoNim(2), P(1, 1, 2), mv.target) and table[mv.target] == 3

    def test_move_to_value_rejects_current(self):
        with pytest.raises(ValueError, match="value not realizable"):
            move_to_value(ExcoNim(2), P(1, 1, 2), 4)

    @settings(max_examples=25, deadline=None)
    @given(st.tuples(st.integers(0, 3), st.integers(0, 6), st.integers(0, 6)), st.data())
    def test_every_smaller_value_reachable(self, coords, data):
        g = sg_bruteforce(ExcoNim(2), P(*coords))
        if g:
            v = data.draw(st.integers(0, g - 1))
            dst = move_to_value(ExcoNim(2), P(*coords), v).target
            assert sg_bruteforce(ExcoNim(2), dst) == v


class TestAxioms:
    @pytest.mark.parametrize("rules,box", [
        (ExcoNim(2), (3, 8, 8)), (ExcoNim(3), (2, 4, 4, 4)), (StandardNim(3), (0, 4, 4, 4)),
        (MooreNim(3, 2), (0, 3, 3, 3)), (CoNim(2), (0, 6, 6)),
    ])
    def test_clean(self, rules, box):
        report = verify_sg_axioms(rules, box)
        assert report.ok and report.checked == np.prod([b + 1 for b in box])

    def test_nim_zeros_are_xor_zero(self):
        zeros = p_positions(StandardNim(3), (0, 7, 7, 7))
        assert zeros == {c for c in itertools.product([0], range(8), range(8), range(8))
                         if c[1] ^ c[2] ^ c[3] == 0}
