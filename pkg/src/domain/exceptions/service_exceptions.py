from typing import Optional


class ServiceException(Exception):
    """Excepción base de servicios"""
    pass


class FeasibilityException(ServiceException):
    """Excepción en los problemas de factibilidad lineal"""
    pass


class CertificateException(ServiceException):
    """Certificado inválido o estructuralmente incompatible con el sistema"""
    pass


class SystemFileException(ServiceException):
    """Excepción al leer un archivo de sistema (con número de línea)"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"línea {line}: {message}"
        super().__init__(message)
