# Testes do CUBDUAL
