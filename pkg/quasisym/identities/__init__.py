from .report import VerificationReport, DegreeResidual, element_residual, failure_residual
from .builders import *
from .core import *
