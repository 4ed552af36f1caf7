from ._hamcube import *  # noqa: F401,F403
