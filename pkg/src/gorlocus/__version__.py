"""
Version of the installed gorlocus distribution, ``None`` when running from an
uninstalled source tree.
"""

from pkg_resources import DistributionNotFound, get_distribution


DISTRIBUTION = "gorlocus"

try:
    __version__ = get_distribution(DISTRIBUTION).version
except DistributionNotFound:  # pragma: no cover
    __version__ = None
