from ._jetfront import *  # noqa: F401,F403
from ._jetfront import __doc__  # noqa: F401
