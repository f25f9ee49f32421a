from .domain_exceptions import (
    DomainException,
    PolynomialParseException,
    DimensionMismatchException,
    ZeroPolynomialException,
    InvalidGradingException,
    InvalidGeneratorSystemException,
    InvalidTentacleException
)
from .service_exceptions import (
    ServiceException,
    FeasibilityException,
    CertificateException,
    SystemFileException
)

__all__ = [
    'DomainException',
    'PolynomialParseException',
    'DimensionMismatchException',
    'ZeroPolynomialException',
    'InvalidGradingException',
    'InvalidGeneratorSystemException',
    'InvalidTentacleException',
    'ServiceException',
    'FeasibilityException',
    'CertificateException',
    'SystemFileException'
]
