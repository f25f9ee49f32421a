# Capa de aplicación

