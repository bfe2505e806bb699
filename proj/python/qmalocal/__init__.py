"""Circuit-to-Hamiltonian compiler with spectral certificates.

Thin Python layer over the C++ core; see ``help(qmalocal._qmalocal)``.
"""

from ._qmalocal import *  # noqa: F401,F403
from ._qmalocal import __version__  # noqa: F401
