"""
Saída Canônica

JSON com chaves ordenadas e separadores fixos, envelope de relatório sem
carimbo de tempo e escrita atômica (arquivo temporário + os.replace).
"""

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Union

from .. import __version__

TOOL_NAME = "quorumlab"


def canonical_json(payload: Any) -> str:
    """Serialização determinística; termina com quebra de linha"""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def pretty_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def input_digest(inputs: Any) -> str:
    """sha256 do JSON canônico das entradas"""
    return hashlib.sha256(canonical_json(inputs).encode("utf-8")).hexdigest()


def envelope(command: str, inputs: Dict[str, Any], result: Any) -> Dict[str, Any]:
    return {
        'tool': TOOL_NAME,
        'version': __version__,
        'command': command,
        'input_digest': input_digest(inputs),
        'result': result,
    }


def atomic_write(path: Union[str, Path], text: str) -> Path:
    """
    Escreve texto em path de forma atômica

    Args:
        path: arquivo de destino (diretório pai é criado)
        text: conteúdo UTF-8

    Returns:
        Path escrito
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path
