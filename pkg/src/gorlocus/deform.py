"""
The deform module.

Checks of one-parameter families ``J`` in ``k[b, x1..xn]``: the intersection
identity ``J = L ∩ K`` of a claimed decomposition, fibres over sampled values
of ``b``, constant fibre dimension and the invariants of the local factors of
each fibre against the catalog targets.

Flatness is checked on a finite sample of ``b`` values, which is the evidence a
report can state, not a proof over the whole line.
"""

from dataclasses import dataclass
import logging

from .artin import (
    profile,
    quotient_algebra,
    square_zero_profile,
)
from .catalog import PARAMETER, FamilyId, expected_profile, family, presentation
from .config import DEFAULT_SAMPLES
from .fields import QQ
from .groebner import NotZeroDimensionalError, ideal_equal, ideal_intersect
from .helpers import format_scalar
from .nets import NetError, classify_net, extract_net


log = logging.getLogger(__name__)


class NoDecompositionError(ValueError):
    """Exception raised when a family carries no claimed decomposition."""

    pass


@dataclass(frozen=True)
class FlatFamilyCertificate(object):
    """
    A family ideal with its claimed decomposition and fibre targets.

    Attributes:
        family (FamilyId): Family id.
        ideal (Ideal): ``J`` over ``k[b, x1..xn]``.
        components (tuple): ``(L, K)`` with ``J = L ∩ K`` claimed, or ``None``.
        special (CatalogId): Expected fibre over ``b = 0``.
        general (GeneralFiber): Expected fibres over ``b != 0``.
    """

    family: FamilyId
    ideal: object
    components: tuple = None
    special: object = None
    general: object = None

    @property
    def degree(self):
        return expected_profile(self.special).degree


def certificate(fid, field=QQ):
    """Return the :class:`FlatFamilyCertificate` of a family id."""
    fam = family(fid, field)
    return FlatFamilyCertificate(
        fam.id, fam.ideal, fam.components, fam.special, fam.general
    )


def verify_decomposition(cert):
    """
    Return whether ``J == L ∩ K``.

    Raises:
        NoDecompositionError: When the certificate has no components.
    """
    if cert.components is None:
        raise NoDecompositionError(
            "Family {0} has no claimed decomposition".format(cert.family)
        )
    first, second = cert.components
    result = ideal_equal(cert.ideal, ideal_intersect(first, second))
    log.info("Decomposition of %s: %s", cert.family, "ok" if result else "fails")
    return result


def fiber(ideal, value):
    """Return the fibre of `ideal` over ``b = value`` in ``k[x1..xn]``."""
    return ideal.specialize(PARAMETER, ideal.ring.field(value))


def special_fiber_matches(cert):
    """Return whether the fibre over ``b = 0`` is the catalog ideal of the target."""
    special = fiber(cert.ideal, 0)
    target = presentation(cert.special, special.ring.field).ideal
    return ideal_equal(special, target)


@dataclass(frozen=True)
class FiberSample(object):
    """
    One sampled fibre.

    Attributes:
        value: The value of ``b``.
        dim (int): Fibre dimension, ``None`` when not zero-dimensional.
        local (bool): Whether the fibre algebra is local.
        factors (tuple): Profiles of the local factors, sorted by Hilbert
            function, or ``None`` when the fibre could not be split.
        nu (int): Square-zero invariant of the non-point factor at the origin.
        coprime (bool): Whether the specialized components are comaximal.
        net_label (str): Net class of the special fibre when it has one.
    """

    value: object
    dim: int = None
    local: bool = None
    factors: tuple = None
    nu: int = None
    coprime: bool = None
    net_label: str = None

    @property
    def hilbert(self):
        if self.factors is None:
            return None
        return tuple(sorted(factor.hilbert for factor in self.factors))

    def to_dict(self):
        return {
            "b": format_scalar(self.value),
            "dim": self.dim,
            "local": self.local,
            "factors": None
            if self.factors is None
            else [list(factor.hilbert) for factor in self.factors],
            "nu": self.nu,
            "coprime": self.coprime,
            "net": self.net_label,
        }


@dataclass(frozen=True)
class FiberReport(object):
    """Sampled fibres of a family."""

    family: FamilyId
    samples: tuple

    @property
    def dims(self):
        return tuple(sample.dim for sample in self.samples)

    @property
    def constant_dimension(self):
        dims = set(self.dims)
        return len(dims) == 1 and None not in dims

    def sample(self, value):
        for sample in self.samples:
            if sample.value == value:
                return sample
        raise KeyError(value)

    def to_dict(self):
        return {
            "family": str(self.family),
            "dims": list(self.dims),
            "profiles": [sample.to_dict() for sample in self.samples],
        }


def _origin_nu(algebra):
    if algebra.dim == 1 or not algebra.is_origin_local:
        return None
    return square_zero_profile(algebra).nu


def _net_label(algebra):
    try:
        return classify_net(extract_net(algebra)).label
    except NetError as error:
        log.debug("No net class: %s", error)
        return None


def _scan_one(cert, value):
    field = cert.ideal.ring.field
    value = field(value)
    try:
        algebra = quotient_algebra(fiber(cert.ideal, value))
    except NotZeroDimensionalError:
        log.info("Fibre of %s at b=%s is not zero-dimensional", cert.family, value)
        return FiberSample(value)

    if algebra.is_local:
        nu = _origin_nu(algebra)
        label = None
        if not value and expected_profile(cert.special).net_class is not None:
            label = _net_label(algebra)
        return FiberSample(
            value, algebra.dim, True, (profile(algebra),), nu, net_label=label
        )

    if cert.components is None:
        return FiberSample(value, algebra.dim, False)

    first, second = (fiber(component, value) for component in cert.components)
    coprime = (first + second).is_unit()
    try:
        parts = [quotient_algebra(first), quotient_algebra(second)]
        factors = tuple(sorted((profile(p) for p in parts), key=lambda f: f.hilbert))
    except ValueError as error:
        log.info("Cannot split fibre of %s at b=%s: %s", cert.family, value, error)
        return FiberSample(value, algebra.dim, False, coprime=coprime)

    nus = [_origin_nu(part) for part in parts if part.dim > 1]
    nu = nus[0] if len(nus) == 1 else None
    return FiberSample(value, algebra.dim, False, factors, nu, coprime)


def fiber_scan(cert, samples=DEFAULT_SAMPLES):
    """
    Return the :class:`FiberReport` of `cert` over the sampled values of ``b``.

    Non-local fibres are split by specializing the two claimed components.

    Raises:
        ValueError: When `samples` is empty or misses ``0``.
    """
    samples = tuple(samples)
    if not samples or all(value != 0 for value in samples):
        raise ValueError("Samples {0} must be nonempty and include 0".format(samples))
    report = FiberReport(cert.family, tuple(_scan_one(cert, v) for v in samples))
    log.info("Fibres of %s: dims %s", cert.family, list(report.dims))
    return report


def fiber_profile_match(report, cert):
    """
    Return whether the sampled fibres match the targets of `cert`.

    The special fibre must have the Hilbert function, Gorenstein property, ``nu``
    and net class recorded for the catalog target; every other fibre must have
    the target's degree, factor Hilbert functions and, when recorded, ``nu``.
    """
    expected = expected_profile(cert.special)
    try:
        special = report.sample(0)
    except KeyError:
        return False

    if special.dim != expected.degree or not special.local:
        return False
    factor = special.factors[0]
    if factor.hilbert != expected.hilbert or factor.gorenstein != expected.gorenstein:
        return False
    if expected.nu is not None and special.nu != expected.nu:
        return False
    if expected.net_class is not None and special.net_label != expected.net_class:
        return False

    general = cert.general
    for sample in report.samples:
        if not sample.value:
            continue
        if sample.dim != expected.degree or sample.hilbert != general.hilbert:
            return False
        if general.nu is not None and sample.nu != general.nu:
            return False
    return True


def nu_profile(cert, samples=DEFAULT_SAMPLES):
    """
    Return ``{b: nu}`` over the sampled fibres (``None`` where the fibre has no
    single non-point factor at the origin).
    """
    report = fiber_scan(cert, samples)
    return {sample.value: sample.nu for sample in report.samples}
