"""MOSFET-based analog joint source-channel coding.

Thin package wrapper over the compiled extension; everything lives in
``ajscc._core``.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "0.1.0"
