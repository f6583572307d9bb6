"""
File utility functions for homyd.
"""

from pathlib import Path
from typing import Union

from ..core.exceptions import FileSystemError
from .simple import logger


def read_document(path: Union[str, Path]) -> str:
    """Read a structure document as UTF-8 text."""
    path = Path(path).expanduser()
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FileSystemError(f"no such file: {path}") from None
    except IsADirectoryError:
        raise FileSystemError(f"{path} is a directory") from None
    except (OSError, UnicodeDecodeError) as e:
        raise FileSystemError(f"cannot read {path}: {e}") from e
    logger.debug("read %d bytes from %s", len(text), path)
    return text


def write_document(path: Union[str, Path], text: str) -> Path:
    """Write ``text`` to ``path``, creating parent directories."""
    path = Path(path).expanduser()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise FileSystemError(f"cannot write {path}: {e}") from e
    logger.debug("wrote %s", path)
    return path
