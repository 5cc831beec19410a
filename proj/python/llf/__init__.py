from ._llf import *  # noqa: F401,F403
