"""
Infraestrutura Compartilhada da CLI

Argumentos comuns, sobrescritas de configuração, logging, console com o
registro de emojis e mapeamento de exceções para códigos de saída
(0 sucesso, 1 verificação falhou, 2 uso inválido).
"""

import argparse
import logging
import sys
from typing import Callable, List, Optional, TextIO

from ..core.config import Config
from ..core.errors import CapacityError, GameInputError, RealizationError
from .output import atomic_write

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class Console:
    """Mensagens para humanos; vão para stderr quando o stdout carrega o resultado"""

    def __init__(self, stream: Optional[TextIO] = None):
        self.stream = stream or sys.stdout

    def _print(self, text: str):
        print(text, file=self.stream)

    def banner(self, title: str):
        self._print("=" * 60)
        self._print(title)
        self._print("=" * 60)

    def step(self, text: str):
        self._print(f"📊 {text}")

    def ok(self, text: str):
        self._print(f"   ✅ {text}")

    def fail(self, text: str):
        self._print(f"   ❌ {text}")

    def warn(self, text: str):
        self._print(f"   ⚠️  {text}")

    def hint(self, text: str):
        self._print(f"   💡 {text}")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"inteiro esperado: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"deve ser >= 1: {value}")
    return value


def parse_n_set(text: str) -> List[int]:
    """Conjunto de n: "1..6", "5,6,7" ou combinações "1..3,35" """
    values = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                first, last = part.split("..", 1)
                first, last = int(first), int(last)
                if last < first:
                    raise ValueError(part)
                values.update(range(first, last + 1))
            elif part:
                values.add(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"conjunto de n inválido: {text!r} (use 1..6 ou 5,6,7)")
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"conjunto de n inválido: {text!r} (n >= 1)")
    return sorted(values)


def add_common_arguments(parser: argparse.ArgumentParser, out_help: str = "Arquivo de saída (default: stdout)"):
    parser.add_argument("--out", default=None, help=out_help)
    parser.add_argument("--max-players", type=positive_int, default=None,
                        help=f"Limite de enumeração (default: QUORUMLAB_MAX_PLAYERS={Config.MAX_PLAYERS})")
    parser.add_argument("--digits", type=positive_int, default=None,
                        help=f"Dígitos significativos nas colunas decimais (default: {Config.DIGITS})")
    parser.add_argument("--log-level", default=None, help="Nível de log (default: QUORUMLAB_LOG_LEVEL)")


def add_game_arguments(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--game", default=None, help="Arquivo JSON do jogo")
    source.add_argument("--n", type=int, default=None, help="Membros por câmara do Legco")
    parser.add_argument("--scenario", default="status_quo",
                        choices=["status_quo", "bicameral_only", "unicameral"],
                        help="Cenário do Legco quando --n é usado")


def setup_logging(level: Optional[str] = None):
    logging.basicConfig(
        level=(level or Config.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def console_for(args) -> Console:
    return Console(sys.stdout if getattr(args, "out", None) else sys.stderr)


def emit(text: str, out: Optional[str], console: Console):
    """Escreve o resultado em --out (atômico) ou no stdout"""
    if out:
        path = atomic_write(out, text)
        console.ok(f"Salvo em: {path}")
    else:
        sys.stdout.write(text)


def execute(run: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """Aplica configuração e converte exceções do domínio em códigos de saída"""
    console = console_for(args)
    Config.override(
        max_players=getattr(args, "max_players", None),
        digits=getattr(args, "digits", None),
        lp_budget=getattr(args, "lp_budget", None),
    )
    try:
        Config.validate()
    except ValueError as e:
        console.fail(f"Configuração inválida: {e}")
        return EXIT_USAGE
    setup_logging(getattr(args, "log_level", None))

    try:
        return run(args)
    except FileNotFoundError as e:
        console.fail(f"Arquivo não encontrado: {e.filename or e}")
        console.hint("Gere o jogo primeiro: python -m src.cli gen --n 5 --out legco.json")
        return EXIT_USAGE
    except CapacityError as e:
        console.fail(str(e))
        return EXIT_USAGE
    except GameInputError as e:
        console.fail(f"Entrada inválida: {e}")
        return EXIT_USAGE
    except RealizationError as e:
        console.fail(str(e))
        return EXIT_CHECK_FAILED
