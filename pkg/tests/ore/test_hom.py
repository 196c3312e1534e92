import pytest

from src.orekit.arith.field import FieldDescriptor
from src.orekit.arith.ratfunc import RatFunc
from src.orekit.errors import RingMismatchError, UnmappedGeneratorError, WitnessError
from src.orekit.maps.automorphism import AutomorphismSpec
from src.orekit.ore.element import OreElement
from src.orekit.ore.hom import hom_apply, hom_check, kernel_probe, ring_hom, surjectivity_witnesses
from src.orekit.ore.ring import OreRingDescriptor


def test_phi_is_a_homomorphism(instance2):
    certificate = hom_check(instance2.phi)
    assert certificate.passed
    assert instance2.phi.fixes_coefficients


def test_images_of_generators(instance2):
    B = instance2.B
    xp, tp = OreElement.skew(B), OreElement.central(B, "t'")
    phi = instance2.phi
    assert phi(OreElement.skew(instance2.A)) == xp ** 2 + tp
    assert phi(OreElement.generator(instance2.A, 'x1')) == OreElement.generator(B, 'x1')
    assert phi.image_of('t') == xp ** 4 - xp + tp ** 2


def test_phi_of_z(instance2):
    B = instance2.B
    tp = OreElement.central(B, "t'")
    assert hom_apply(instance2.phi, instance2.z) == instance2.z_prime ** 2 + tp ** 4 - tp


def test_wrong_skew_image_fails_the_relation(instance2):
    B = instance2.B
    h = ring_hom(instance2.A, B, {'x': OreElement.skew(B), 't': OreElement.central(B, "t'")}, name='h')
    certificate = hom_check(h)
    assert certificate.failed
    assert certificate.witness.endswith('[h(x), h(x1)] = x3 but h(delta(x1)) = x2')


def test_non_central_image_of_t_fails(instance2):
    A = instance2.A
    h = ring_hom(A, A, {'x': OreElement.skew(A), 't': OreElement.skew(A)}, name='h')
    certificate = hom_check(h)
    assert certificate.failed
    assert 'h(t) central' in certificate.witness


def test_missing_images(instance2):
    with pytest.raises(UnmappedGeneratorError):
        ring_hom(instance2.A, instance2.B, {'x': OreElement.skew(instance2.B)})


def test_images_must_live_in_the_target(instance2):
    with pytest.raises(RingMismatchError):
        ring_hom(instance2.A, instance2.B, {'x': OreElement.skew(instance2.A), 't': OreElement.central(instance2.B, "t'")})


def test_apply_outside_the_source(instance2):
    with pytest.raises(RingMismatchError):
        instance2.phi(OreElement.skew(instance2.B))


def test_surjectivity_witnesses(instance2):
    A, B = instance2.A, instance2.B
    t = OreElement.central(A, 't')
    tp = OreElement.central(B, "t'")
    verified = surjectivity_witnesses(instance2.phi, [("t'", tp, t ** 2 - instance2.z)])
    assert list(verified) == ["t'"]
    with pytest.raises(WitnessError):
        surjectivity_witnesses(instance2.phi, [("t'", tp, t)])


def test_kernel_probe_on_phi(instance2):
    certificate = kernel_probe(instance2.phi, max_skew=2, max_central=1)
    assert certificate.passed
    assert certificate.details['rank'] == 6


def test_kernel_probe_finds_a_collapse(instance2):
    A = instance2.A
    h = ring_hom(A, A, {'x': OreElement.skew(A), 't': OreElement.zero(A)}, name='h')
    certificate = kernel_probe(h)
    assert certificate.failed
    assert certificate.witness == 'h(t) is K-dependent on the earlier images'


def test_coefficient_images_need_not_be_fixed():
    field = FieldDescriptor(0, ('x1', 'x2'))
    ring = OreRingDescriptor(field, 'x', None, None, (), 'P')
    swap = ring_hom(
        ring,
        ring,
        {'x': OreElement.skew(ring)},
        coeff_images={'x1': OreElement.generator(ring, 'x2'), 'x2': OreElement.generator(ring, 'x1')},
        name='swap',
    )
    assert not swap.fixes_coefficients
    assert hom_check(swap).passed
    x1, x2 = RatFunc.variable(field, 'x1'), RatFunc.variable(field, 'x2')
    element = OreElement.scalar(ring, x1 / (x2 + 1)) * OreElement.skew(ring)
    assert swap(element) == OreElement.scalar(ring, x2 / (x1 + 1)) * OreElement.skew(ring)
    with pytest.raises(ValueError):
        kernel_probe(swap)


def test_twisted_source_is_rejected():
    field = FieldDescriptor(0, ('x1', 'x2'))
    sigma = AutomorphismSpec.from_images(field, {'x1': RatFunc.variable(field, 'x2'), 'x2': RatFunc.variable(field, 'x1')})
    ring = OreRingDescriptor(field, 'y', sigma, None, (), 'S')
    h = ring_hom(ring, ring, {'y': OreElement.skew(ring)})
    with pytest.raises(ValueError):
        hom_check(h)
