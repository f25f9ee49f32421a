# Capa de dominio

