from .graded_degree import GradedDegree
from .term_order import Comparison, TermOrder, TermOrderKind
from .grading_interface import GradingInterface
from .z_grading import ZGrading, ZVector
from .term_order_grading import TermOrderGrading

__all__ = [
    'GradedDegree',
    'Comparison',
    'TermOrder',
    'TermOrderKind',
    'GradingInterface',
    'ZGrading',
    'ZVector',
    'TermOrderGrading'
]
