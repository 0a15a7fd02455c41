"""Unit tests for Cayley tables."""
import numpy as np
import pytest
from sectio.config.settings import settings
from sectio.errors import InvalidGroupTable, InvalidParameter, OrderCapExceeded
from sectio.groups.constructors import make_cyclic
from sectio.groups.table import Element, GroupTable


class TestGroupTable:
    """Tests for GroupTable basics."""

    def test_cyclic_structure(self, z6):
        """Test element orders and flags of Z6."""
        # Verify
        assert z6.order == 6
        assert z6.is_abelian and z6.is_cyclic
        assert z6.orders == (1, 6, 3, 2, 3, 6)
        assert z6.exponent == 6

    def test_power_and_inverse(self, z6):
        """Test negative powers go through the inverse."""
        assert z6.inverse(1) == 5
        assert z6.power(1, -1) == 5
        assert z6.power(2, 3) == 0

    def test_quaternion_is_not_abelian(self, q8):
        """Test Q8 is neither abelian nor cyclic."""
        assert not q8.is_abelian
        assert not q8.is_cyclic
        assert q8.exponent == 4

    def test_rejects_non_group(self):
        """Test a table without a two-sided identity is rejected."""
        with pytest.raises(InvalidGroupTable):
            GroupTable(np.array([[1, 0], [0, 1]])).validate()

    def test_rejects_non_square(self):
        """Test the table must be square."""
        with pytest.raises(InvalidGroupTable):
            GroupTable(np.zeros((2, 3), dtype=int))

    def test_order_cap(self):
        """Test construction above the order cap fails."""
        # Setup
        settings.MAX_ORDER = 8

        # Execute and verify
        with pytest.raises(OrderCapExceeded):
            make_cyclic(9)
        assert make_cyclic(8).order == 8


class TestElement:
    """Tests for element references."""

    def test_name_and_order(self, q8):
        """Test element names follow the canonical Q8 ordering."""
        element = Element(q8, 4)
        assert element.name == "-1"
        assert element.order == 2

    def test_out_of_range(self, z4):
        """Test indices outside the group are rejected."""
        with pytest.raises(InvalidParameter):
            Element(z4, 4)
