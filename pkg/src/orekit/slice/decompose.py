"""
The slice theorem as a rewriting loop: with a central slice x
(d_1(x) = 1, d_i(x) = 0 for i >= 2) every element is a polynomial in x
with coefficients in the kernel, and the sum of the kernel times x^i is direct.
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from ..certificate import Certificate, failed, passed
from ..errors import JetError, NonKernelResidueError, SliceConditionError, TruncationExhaustedError
from ..hasse_schmidt.algebra import OreAlgebra
from ..hasse_schmidt.jet import HSFamily, kernel_membership
from ..ore.centrality import is_central
from .nu import nu, nu_reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SliceDecomposition:
    slice: Any
    coefficients: Tuple[Any, ...]
    kernel_certificates: Tuple[Certificate, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def check_slice_condition(x: Any, j: HSFamily) -> Certificate:
    """x is central, d_1(x) = 1 and d_i(x) = 0 for 2 <= i <= N."""
    name = f'slice({x})'
    x = j.algebra.coerce(x)
    if isinstance(j.algebra, OreAlgebra):
        central = is_central(x)
        if central.failed:
            return failed(name, f'not central: {central.witness}')
    components = j.components(x)
    if components[1] != j.algebra.one():
        return failed(name, f'd_1({x}) = {components[1]}, not 1')
    for i in range(2, j.truncation + 1):
        if not components[i].is_zero:
            return failed(name, f'd_{i}({x}) = {components[i]}, not 0', index=i)
    return passed(name)


def _kernel_certificate(c: Any, j: HSFamily, i: int) -> Certificate:
    label = f'c_{i} in ker({j.name})'
    if kernel_membership(j, c):
        return passed(label, None, truncation=j.truncation)
    return failed(label, f'c_{i} = {c} is moved by {j.name}')


def slice_decompose(a: Any, j: HSFamily, x: Any) -> SliceDecomposition:
    """
    Write a = sum c_i x^i with every c_i in the kernel.

    Repeats m = nu(a), c = d_m(a), a <- a - c x^m until nu(a) = 0; nu
    strictly decreases because d_m(c x^m) = c.

    Raises:
        SliceConditionError: x is not a central slice
        NonKernelResidueError: a leading coefficient is not in the kernel
    """
    algebra = j.algebra
    condition = check_slice_condition(x, j)
    if condition.failed:
        raise SliceConditionError(condition.witness)
    x = algebra.coerce(x)
    rest = algebra.coerce(a)
    coefficients: dict = {}

    while not rest.is_zero:
        m = nu(rest, j)
        if m == 0:
            coefficients[0] = coefficients.get(0, algebra.zero()) + rest
            break
        c = j.component(m, rest)
        if not kernel_membership(j, c):
            raise NonKernelResidueError(f'd_{m}({rest}) = {c} is not in the kernel; {j.name} is not iterative here')
        rest = rest - c * x ** m
        coefficients[m] = coefficients.get(m, algebra.zero()) + c
        after = nu(rest, j)
        if after >= m:
            raise NonKernelResidueError(f'nu did not drop below {m} after removing {c}*x^{m}')
        logger.debug('slice step: removed degree %d, nu now %d', m, after)

    if not coefficients:
        return SliceDecomposition(x, (), ())
    top = max(coefficients)
    ordered = tuple(coefficients.get(i, algebra.zero()) for i in range(top + 1))
    certificates = tuple(_kernel_certificate(c, j, i) for i, c in enumerate(ordered))
    return SliceDecomposition(x, ordered, certificates)


def reconstruct(decomposition: SliceDecomposition) -> Any:
    """sum c_i x^i."""
    x = decomposition.slice
    total = x - x
    power = x ** 0
    for c in decomposition.coefficients:
        total = total + c * power
        power = power * x
    return total


def independence_check(coeffs: Sequence[Any], x: Any, j: HSFamily, m: int) -> Certificate:
    """
    For x with d_m(x) != 0 and d_(m+i)(x) = 0 (i >= 1), check
    d_(ms)(sum b_i x^i) = b_s d_m(x)^s where s is the last index with b_s != 0.

    Hence sum b_i x^i = 0 forces b_s d_m(x)^s = 0, and the sum of kernel
    multiples of the powers of x is direct when d_m(x) is not a zero divisor.

    Raises:
        SliceConditionError: x does not have top component d_m
        TruncationExhaustedError: m*s exceeds the truncation
    """
    algebra = j.algebra
    name = f'independence(x = {x}, m = {m})'
    x = algebra.coerce(x)
    bs = [algebra.coerce(b) for b in coeffs]
    nonzero = [i for i, b in enumerate(bs) if not b.is_zero]
    if not nonzero:
        return passed(name, '0 = 0')
    s = nonzero[-1]
    components = j.components(x)
    if m < 1 or m > j.truncation or components[m].is_zero:
        raise SliceConditionError(f'd_{m}({x}) must be nonzero')
    if any(not components[i].is_zero for i in range(m + 1, j.truncation + 1)):
        raise SliceConditionError(f'{x} has nonzero components above d_{m}')
    if m * s > j.truncation:
        raise TruncationExhaustedError(f'd_{m * s} lies beyond the truncation {j.truncation}')

    total = algebra.zero()
    for i, b in enumerate(bs):
        if not b.is_zero:
            total = total + b * x ** i
    lhs = j.component(m * s, total)
    rhs = bs[s] * components[m] ** s
    if lhs != rhs:
        return failed(name, f'd_{m * s}(sum b_i x^i) = {lhs} but b_{s} d_{m}(x)^{s} = {rhs}', s=s)
    return passed(name, f'd_{m * s}(sum b_i x^i) = b_{s} d_{m}(x)^{s} = {rhs}', s=s)


@dataclass(frozen=True)
class FoundSlice:
    slice: Any
    source: Any
    steps: Tuple[Any, ...]
    certificate: Certificate


def _invert_kernel_unit(c: Any, algebra) -> Any:
    if isinstance(algebra, OreAlgebra):
        if not c.is_scalar:
            raise SliceConditionError(f'{c} is not a unit of {algebra.ring.name}')
        return algebra.coerce(c.scalar_value().inverse())
    if algebra.polynomial and not c.is_constant:
        raise SliceConditionError(f'{c} is not a unit of {algebra}')
    return c.inverse()


def find_slice(a: Any, j: HSFamily) -> FoundSlice:
    """
    Produce a slice from an element outside the kernel.

    First lower nu(a) to 1 (with d_(nu-1) in characteristic 0, by nu
    reduction in characteristic p), giving b; then c = d_1(b) lies in the
    kernel and x = c^(-1) b satisfies d_1(x) = 1, d_i(x) = 0 for i >= 2.

    Raises:
        SliceConditionError: a is in the kernel, nu cannot be lowered to 1,
            or d_1(b) is not a unit
    """
    algebra = j.algebra
    p = algebra.characteristic
    m = nu(a, j)
    if m == 0:
        raise SliceConditionError(f'{a} lies in the kernel; it yields no slice')
    steps: List[Any] = [algebra.coerce(a)]
    if p:
        chain = nu_reduce(a, j, p)
        if chain.terminal_nu != 1:
            raise SliceConditionError(f'nu can only be lowered to {chain.terminal_nu}, not 1, in characteristic {p}')
        steps = list(chain.elements)
        b = chain.end
    else:
        b = j.component(m - 1, a) if m > 1 else steps[0]
        if m > 1:
            steps.append(b)
    c = j.component(1, b)
    if not kernel_membership(j, c):
        raise SliceConditionError(f'd_1({b}) = {c} is not in the kernel')
    x = _invert_kernel_unit(c, algebra) * b
    components = j.components(x)
    if components[1] != algebra.one() or any(not components[i].is_zero for i in range(2, j.truncation + 1)):
        raise JetError(f'{x} is not a slice although d_1({b}) is a kernel unit')
    certificate = passed(f'slice from {a}', f'x = {x}: d_1(x) = 1, d_i(x) = 0 for 2 <= i <= {j.truncation}')
    return FoundSlice(x, steps[0], tuple(steps), certificate)
