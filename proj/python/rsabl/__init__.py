try:
    from ._rsabl import *  # noqa: F401,F403
except ImportError:
    from _rsabl import *  # noqa: F401,F403
