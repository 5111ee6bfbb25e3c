"""KR modules of quantum affine gl(M,N): exact symbolic computations."""
from ._skr import *  # noqa: F401,F403
from ._skr import SkrError, Scalar, Representation  # noqa: F401
