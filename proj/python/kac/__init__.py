from ._kac import *  # noqa: F401,F403
from ._kac import __version__  # noqa: F401
