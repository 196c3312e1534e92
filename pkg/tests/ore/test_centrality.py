from src.orekit.ore.centrality import is_central
from src.orekit.ore.element import OreElement


def test_skew_variable_is_not_central(instance2):
    certificate = is_central(OreElement.skew(instance2.A))
    assert certificate.failed
    assert certificate.witness == '[x, x1] = x2'
    assert certificate.details['generator'] == 'x1'


def test_coefficient_variable_is_not_central(instance2):
    certificate = is_central(OreElement.generator(instance2.A, 'x1'))
    assert certificate.failed
    assert certificate.witness == '[x1, x] = x2'


def test_central_elements(instance2):
    A = instance2.A
    assert is_central(OreElement.central(A, 't')).passed
    assert is_central(OreElement.one(A)).passed
    assert is_central(instance2.z).passed
    assert is_central(instance2.z_prime).passed


def test_restricted_witness_set(instance2):
    x = OreElement.skew(instance2.A)
    certificate = is_central(x, witnesses=['t'], label='x against t')
    assert certificate.passed
    assert certificate.name == 'x against t'
    assert certificate.details['generators'] == ['t']


def test_z_is_central_for_p_equal_three(instance3):
    assert is_central(instance3.z).passed
    assert is_central(instance3.z_prime).passed
