"""
The api module.
"""

from .artin import quotient_algebra
from .catalog import FamilyId, presentation
from .deform import certificate
from .fields import QQ
from .groebner import Ideal
from .parser import parse_ideal_text
from .tangent import ag_embed


def ideal(text, field=QQ):
    """
    Return the :class:`.Ideal` described by the text of an ideal file.

    .. seealso:: See :func:`.parse_ideal_text` for the file format.
    """
    ring, generators = parse_ideal_text(text, field)
    return Ideal(ring, generators)


def algebra(obj, field=QQ):
    """
    Return the :class:`.QuotientAlgebra` of an :class:`.Ideal`, of ideal file
    text or of a catalog id such as ``"A3[h=4,n=4]"``.

    .. seealso:: See :func:`.quotient_algebra` for function signature details.
    """
    if isinstance(obj, str):
        obj = ideal(obj, field) if ":" in obj else presentation(obj, field).ideal
    return quotient_algebra(obj)


def entry(*args, **kargs):
    """
    Alias to :func:`.presentation`.

    .. seealso:: See :func:`.presentation` for function signature details.
    """
    return presentation(*args, **kargs)


def family(fid, field=QQ):
    """
    Return the :class:`.FlatFamilyCertificate` of a family id (or its text,
    e.g. ``"net-split:A3[h=4,n=4]@corrected"``).

    .. seealso:: See :func:`.certificate` for function signature details.
    """
    if isinstance(fid, str):
        fid = FamilyId.parse(fid)
    return certificate(fid, field)


def embed(*args, **kargs):
    """
    Alias to :func:`.ag_embed`.

    .. seealso:: See :func:`.ag_embed` for function signature details.
    """
    return ag_embed(*args, **kargs)
