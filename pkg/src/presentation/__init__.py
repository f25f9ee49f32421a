# Capa de presentación

