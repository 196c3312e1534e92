from src.orekit.arith.field import FieldDescriptor
from src.orekit.arith.ratfunc import RatFunc
from src.orekit.counterexample.checks import (
    ansatz_obstruction,
    cited_injectivity,
    pth_root_rigidity,
    surjectivity_claims,
    verify_centrality,
    verify_delta_periodicity,
    verify_filtration,
    verify_kernel_probe,
    verify_not_isomorphic,
    verify_phi,
)
from src.orekit.counterexample.instance import build_instance
from src.orekit.maps.derivation import DerivationSpec


def test_periodicity(instance2):
    certificate = verify_delta_periodicity(instance2)
    assert certificate.passed
    names = [part.name for part in certificate.details['parts']]
    assert names == ['delta^4 = delta^1', "delta'^4 = delta'^1", 'delta^8 = delta^2', "delta'^8 = delta'^2"]


def test_periodicity_at_a_deeper_level(instance3):
    certificate = verify_delta_periodicity(instance3, levels=[0, 1, 2])
    assert certificate.passed
    assert len(certificate.details['parts']) == 6


def test_centrality(instance2):
    certificate = verify_centrality(instance2)
    assert certificate.name == 'centrality'
    assert certificate.passed


def test_phi_is_onto(instance2):
    certificate = verify_phi(instance2)
    assert certificate.passed
    onto = certificate.details['parts'][-1]
    assert onto.name == 'Phi onto'
    assert set(onto.details['witnesses']) == {"t'", "z'", "x'^2", "x'", 'x1', 'x2', 'x3'}


def test_surjectivity_claims_order(instance2):
    labels = [label for label, _, _ in surjectivity_claims(instance2)]
    assert labels == ["t'", "z'", "x'^2", "x'", 'x1', 'x2', 'x3']


def test_pth_roots_are_rigid(instance2):
    assert pth_root_rigidity(instance2).passed


def test_obstruction_witness(instance2):
    certificate = ansatz_obstruction(instance2.delta, instance2.delta_prime)
    assert certificate.passed
    assert certificate.witness == 'x1*x2 != x3^2'
    assert certificate.details['generators'] == ('x1', 'x2')


def test_obstruction_for_p3(instance3):
    certificate = ansatz_obstruction(instance3.delta, instance3.delta_prime)
    assert certificate.passed
    assert certificate.witness == 'x2*x5 != x3*x4'


def test_no_obstruction_between_equal_derivations(instance2):
    certificate = ansatz_obstruction(instance2.delta, instance2.delta)
    assert certificate.failed
    assert certificate.witness.startswith('no obstruction')
    assert certificate.details['alpha'] == 1


def test_obstruction_from_a_vanishing_image():
    field = FieldDescriptor(2, ('x1', 'x2'))
    d = DerivationSpec.from_images(field, {'x1': 1, 'x2': 1})
    dp = DerivationSpec.from_images(field, {'x1': 0, 'x2': 1}, name="d'")
    certificate = ansatz_obstruction(d, dp)
    assert certificate.passed
    assert certificate.witness == "delta(x1) = 1 but delta'(x1) = 0"


def test_scalar_multiple_is_no_obstruction():
    field = FieldDescriptor(3, ('x1', 'x2'))
    x1, x2 = RatFunc.variable(field, 'x1'), RatFunc.variable(field, 'x2')
    d = DerivationSpec.from_images(field, {'x1': x2, 'x2': x1})
    dp = DerivationSpec.from_images(field, {'x1': x2 * 2, 'x2': x1 * 2})
    certificate = ansatz_obstruction(d, dp)
    assert certificate.failed
    assert certificate.details['alpha'] == 2


def test_not_isomorphic(instance2):
    certificate = verify_not_isomorphic(instance2)
    assert certificate.passed
    assert certificate.witness == 'x1*x2 != x3^2'
    statuses = [part.status for part in certificate.details['parts']]
    assert statuses == ['pass', 'pass', 'cited']


def test_filtration(instance2):
    certificate = verify_filtration(instance2)
    assert certificate.passed
    assert certificate.name == 'filtration'
    assert certificate.details['n_max'] == 3
    assert certificate.details['dims'] == [8, 16, 24, 32]


def test_kernel_probe(instance2):
    assert verify_kernel_probe(instance2, max_skew=1).passed


def test_injectivity_is_cited():
    certificate = cited_injectivity()
    assert certificate.status == 'cited'
    assert bool(certificate)


def test_control_instance_fails():
    control = build_instance(2, delta_prime_power=1)
    assert verify_phi(control).failed
    assert verify_not_isomorphic(control).failed
    assert verify_centrality(control).passed
