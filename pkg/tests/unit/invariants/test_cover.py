"""Unit tests for the exact minimum set cover."""
import pytest
from sectio.errors import SearchBudgetExceeded
from sectio.invariants.cover import all_min_covers, min_cover


class TestMinCover:
    """Tests for min_cover and all_min_covers."""

    def test_dominated_candidates_are_dropped(self):
        """Test {0} is dropped in favour of {0, 1}."""
        solution = min_cover({0, 1, 2}, [{0}, {1, 2}, {0, 1}])
        assert solution.size == 2
        assert solution.chosen == (1, 2)

    def test_lexicographically_least(self):
        # Setup
        candidates = [{0, 1}, {2, 3}, {1, 2}, {0, 3}]

        # Execute
        solution = min_cover({0, 1, 2, 3}, candidates)

        # Verify
        assert solution.size == 2
        assert solution.chosen == (0, 1)

    def test_mask_input(self):
        assert min_cover(0b111, [0b011, 0b110]).size == 2

    def test_uncoverable(self):
        assert min_cover({0, 1, 2}, [{0}, {1}]) is None

    def test_empty_universe(self):
        solution = min_cover(set(), [{0}])
        assert solution.size == 0 and solution.chosen == ()

    def test_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            min_cover({0, 1, 2}, [{0}, {1}, {2}], budget=0)

    def test_all_min_covers(self):
        """Test every 2-cover is listed, dominated candidates included."""
        covers = all_min_covers({0, 1, 2}, [{0}, {1, 2}, {0, 1}, {2}], 2)
        assert covers == [(0, 1), (1, 2), (2, 3)]

    def test_all_min_covers_limit(self):
        covers = all_min_covers({0, 1, 2}, [{0}, {1, 2}, {0, 1}, {2}], 2, limit=1)
        assert covers == [(0, 1)]
