import pytest

from src.orekit.arith.field import FieldDescriptor
from src.orekit.arith.pth_power import PthPowerSubfield
from src.orekit.errors import RingMismatchError
from src.orekit.ore.filtration import filtration_dims


def test_dimensions_grow_by_the_field_degree(instance2):
    assert filtration_dims(instance2.A, instance2.k, 3) == [8, 16, 24, 32]


def test_second_ring_has_the_same_profile(instance2):
    assert filtration_dims(instance2.B, instance2.k, 2) == [8, 16, 24]


def test_zeroth_piece_is_the_coefficient_field(instance2):
    assert filtration_dims(instance2.A, instance2.k, 0) == [8]


def test_subfield_must_belong_to_the_ring(instance2):
    other = PthPowerSubfield(FieldDescriptor(2, ('y1',)))
    with pytest.raises(RingMismatchError):
        filtration_dims(instance2.A, other, 1)
    with pytest.raises(ValueError):
        filtration_dims(instance2.A, instance2.k, -1)
