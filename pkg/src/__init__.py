"""
QuorumLab - Análise Combinatória de Jogos de Votação

Toolkit para jogos simples monótonos e a família Legco: avaliação de
coalizões, ordens de desejabilidade, certificação de dimensão e índices
de poder exatos (Banzhaf e Shapley-Shubik).
"""

__version__ = "1.0.0"
