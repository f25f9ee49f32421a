# Capa de infraestructura

