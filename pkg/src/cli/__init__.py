"""CLI - Interface de Linha de Comando"""

# Comandos disponíveis (python -m src.cli <comando>):
# - gen: documento JSON do jogo ou da matriz candidata
# - analyze: desejabilidade e completude
# - dimension: certificados de dimensão e decomposição em fatores
# - power: índices de poder
# - sweep: varredura em n (CSV)
# - verify: bateria de verificação

__all__ = ['gen', 'analyze', 'dimension', 'power', 'sweep', 'verify']
