"""Finite computations with prederivators over homotopy finite categories.

Submodules: ``fincat`` (finite categories), ``sset`` (truncated simplicial
sets), ``hocat`` (homotopy categories), ``pdv`` (prederivators), ``lkan``
(the left adjoint L), ``quasirep`` (quasi-representability),
``modelcheck`` (lifting checks) and ``cli``.
"""

from .errors import (BoundError, FormatError, InvalidCertificate, NotAQuasicategory,
                     NotQuasiRepresentable, PdcalcError, ResourceError, WordBoundExceeded)

__version__ = "0.1.0"

__all__ = ["BoundError", "FormatError", "InvalidCertificate", "NotAQuasicategory",
           "NotQuasiRepresentable", "PdcalcError", "ResourceError", "WordBoundExceeded"]
