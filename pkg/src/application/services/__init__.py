from .polynomial_parser_service import PolynomialParserService
from .grading_service import GradingService
from .feasibility_service import FeasibilityService
from .positivity_search_service import PositivitySearchService
from .stability_service import StabilityService
from .certificate_service import CertificateService
from .system_file_service import SystemFileService

__all__ = [
    'PolynomialParserService',
    'GradingService',
    'FeasibilityService',
    'PositivitySearchService',
    'StabilityService',
    'CertificateService',
    'SystemFileService'
]
