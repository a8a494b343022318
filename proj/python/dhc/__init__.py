"""Density hypercube numerics.

States and maps of the doubled theory, decoherence and hyper-decoherence
idempotents, classical and quantum recovery, and the multi-slit
interference harness.
"""

try:
    from ._dhc import *  # noqa: F401,F403
    from ._dhc import __version__  # noqa: F401
except ImportError:  # development builds put _dhc on sys.path directly
    from _dhc import *  # noqa: F401,F403
    from _dhc import __version__  # noqa: F401
