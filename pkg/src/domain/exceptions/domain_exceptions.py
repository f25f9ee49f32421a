from typing import Optional


class DomainException(Exception):
    """Excepción base del dominio"""
    pass


class PolynomialParseException(DomainException):
    """Excepción para textos de polinomios inválidos (con posición del error)"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (posición {position})"
        super().__init__(message)


class DimensionMismatchException(DomainException):
    """Excepción cuando no coincide el número de variables o la longitud de un vector"""
    pass


class ZeroPolynomialException(DomainException):
    """Excepción para operaciones que no están definidas sobre el polinomio 0"""
    pass


class InvalidGradingException(DomainException):
    """Excepción para graduaciones inválidas (vector z nulo, permutación incorrecta, sintaxis)"""
    pass


class InvalidGeneratorSystemException(DomainException):
    """Excepción para sistemas de generadores vacíos o con generadores nulos"""
    pass


class InvalidTentacleException(DomainException):
    """Excepción para tentáculos degenerados o valores de lambda menores que 1"""
    pass
