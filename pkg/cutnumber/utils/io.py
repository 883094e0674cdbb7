"""
File helpers for the cutnumber package: atomic JSON output and lookup of bundled
presentation files.
"""

import json
import os
import tempfile
from typing import Any, List, Optional

from cutnumber.utils.errors import OutputError
from cutnumber.utils.logger import get_logger

logger = get_logger("io")

PRESENTATION_SUFFIX = ".txt"


def presentations_dir() -> str:
    """
    Get the directory holding the bundled presentation files.

    Returns:
        Absolute path of ``cutnumber/configs/presentations``
    """
    base_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    return os.path.join(base_dir, "configs", "presentations")


def bundled_presentations() -> List[str]:
    """
    List the names of the bundled presentations.

    Returns:
        Sorted names without the file suffix
    """
    directory = presentations_dir()
    if not os.path.isdir(directory):
        return []
    return sorted(
        name[: -len(PRESENTATION_SUFFIX)]
        for name in os.listdir(directory)
        if name.endswith(PRESENTATION_SUFFIX)
    )


def resolve_presentation_path(path_or_name: str) -> str:
    """
    Resolve a presentation argument to a file path.

    An existing path wins; otherwise the argument is looked up among the bundled
    presentations (with or without the ``.txt`` suffix).

    Args:
        path_or_name: File path or bundled presentation name

    Returns:
        Path to an existing file, or the argument unchanged if nothing matched
    """
    if os.path.exists(path_or_name):
        return path_or_name

    name = path_or_name
    if not name.endswith(PRESENTATION_SUFFIX):
        name += PRESENTATION_SUFFIX
    candidate = os.path.join(presentations_dir(), name)
    if os.path.exists(candidate):
        logger.debug(f"Using bundled presentation {candidate}")
        return candidate
    return path_or_name


def read_text(path: str, encoding: str = "utf-8") -> str:
    """
    Read a text file.

    Args:
        path: Path to the file
        encoding: File encoding

    Returns:
        File contents as a string
    """
    try:
        with open(path, "r", encoding=encoding) as f:
            return f.read()
    except Exception as e:
        logger.error(f"Error reading file {path}: {str(e)}")
        raise


def dumps_json(data: Any) -> str:
    """
    Serialize data deterministically: declared key order, two-space indent, trailing newline.

    Args:
        data: JSON-compatible data

    Returns:
        JSON text
    """
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def resolve_output_path(path: str, output_dir: Optional[str] = None) -> str:
    """
    Place a relative output path under the configured output directory.

    Args:
        path: Requested output path
        output_dir: Default directory for relative paths (optional)

    Returns:
        Path to write to
    """
    if os.path.isabs(path) or not output_dir:
        return path
    return os.path.join(output_dir, path)


def json_write_atomic(path: str, data: Any, encoding: str = "utf-8") -> str:
    """
    Write data to a JSON file atomically.

    The document is written to a temporary file in the target directory and moved
    into place with ``os.replace``, so readers never observe a partial certificate.

    Args:
        path: Path to the JSON file
        data: Data to write
        encoding: File encoding

    Returns:
        The path written

    Raises:
        OutputError: If the directory cannot be created or the file cannot be written
    """
    directory = os.path.dirname(os.path.abspath(path))
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(prefix=".cutnumber-", suffix=".json", dir=directory)
    except OSError as e:
        logger.error(f"Error preparing JSON file {path}: {str(e)}")
        raise OutputError(f"Cannot write {path}: {e.strerror or e}", path=path) from e
    try:
        with os.fdopen(fd, "w", encoding=encoding) as f:
            f.write(dumps_json(data))
        os.replace(tmp_path, path)
    except OSError as e:
        logger.error(f"Error writing JSON file {path}: {str(e)}")
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise OutputError(f"Cannot write {path}: {e.strerror or e}", path=path) from e
    logger.debug(f"Wrote {path}")
    return path
