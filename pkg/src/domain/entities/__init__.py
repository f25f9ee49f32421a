# Los tipos que dependen de src.domain.gradings (feasibility, verdict, tentacle)
# se importan por su módulo para no crear un ciclo con ese paquete.
from .polynomial import ExponentVector, Polynomial, VariableContext
from .generator_system import GeneratorSystem, SystemMode

__all__ = ['ExponentVector', 'Polynomial', 'VariableContext', 'GeneratorSystem', 'SystemMode']
