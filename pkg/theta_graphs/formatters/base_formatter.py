"""
Base Formatter Architecture
===========================

Abstract base class for the output formatters. A formatter renders a result
object (graph, relation, report) to text; writing to disk goes through the
shared ``write`` helper so overwrite handling and logging stay uniform.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

logger = logging.getLogger(__name__)


class FormatterError(Exception):
    """Exception raised for formatter-related errors."""
    pass


@dataclass
class FormatterConfig:
    """Configuration settings for formatters."""
    output_directory: Optional[str] = None
    overwrite_existing: bool = True
    create_directories: bool = True

    # JSON / text layout
    indent: int = 2


class BaseFormatter(ABC):
    """
    Abstract base class for all output formatters.

    Concrete formatters implement ``render``; ``write`` stores the rendered
    text under the configured output directory (or at an explicit path).
    """

    def __init__(self, config: Optional[FormatterConfig] = None):
        self.config = config or FormatterConfig()
        self.logger = logging.getLogger(f"{self.__class__.__module__}.{self.__class__.__name__}")

    @abstractmethod
    def render(self, obj: Any) -> str:
        """
        Render ``obj`` as text.

        Raises:
            FormatterError: If the object type is not supported
        """
        pass

    def write(self, obj: Any, target: Union[str, Path]) -> Path:
        """
        Render ``obj`` and write it to ``target``.

        A relative ``target`` is resolved against the configured output
        directory when one is set.

        Raises:
            FormatterError: If the file exists and overwriting is disabled, or
                the file cannot be written
        """
        path = self._get_output_path(target)
        self._log_processing_start("rendering", str(path))
        if self._check_file_exists(path):
            raise FormatterError(f"Refusing to overwrite existing file: {path}")
        try:
            if self.config.create_directories:
                path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.render(obj), encoding="utf-8")
        except OSError as e:
            self._log_processing_error("rendering", str(path), str(e))
            raise FormatterError(f"Failed to write {path}: {e}") from e
        self._log_processing_complete("rendering", type(obj).__name__, path)
        return path

    def _get_output_path(self, target: Union[str, Path]) -> Path:
        path = Path(target)
        if not path.is_absolute() and self.config.output_directory:
            return Path(self.config.output_directory) / path
        return path

    def _check_file_exists(self, file_path: Path) -> bool:
        """True when ``file_path`` exists and must not be overwritten."""
        if file_path.exists():
            if not self.config.overwrite_existing:
                self.logger.warning(f"File exists and overwrite disabled: {file_path}")
                return True
            self.logger.info(f"Overwriting existing file: {file_path}")
        return False

    def _unsupported(self, obj: Any) -> FormatterError:
        return FormatterError(f"{self.__class__.__name__} cannot render {type(obj).__name__}")

    def _log_processing_start(self, operation: str, target: str) -> None:
        self.logger.debug(f"Starting {operation} for: {target}")

    def _log_processing_complete(self, operation: str, target: str, output_path: Path) -> None:
        self.logger.info(f"Completed {operation} for {target} -> {output_path}")

    def _log_processing_error(self, operation: str, target: str, error: str) -> None:
        self.logger.error(f"Failed {operation} for {target}: {error}")


class FormatterRegistry:
    """Registry for managing available formatters."""

    def __init__(self) -> None:
        self._formatters: Dict[str, type] = {}

    def register(self, name: str, formatter_class: type) -> None:
        if not issubclass(formatter_class, BaseFormatter):
            raise FormatterError(f"Formatter {name} must inherit from BaseFormatter")
        self._formatters[name] = formatter_class
        logger.debug(f"Registered formatter: {name}")

    def get_formatter(self, name: str, config: Optional[FormatterConfig] = None) -> BaseFormatter:
        if name not in self._formatters:
            raise FormatterError(f"Formatter '{name}' not found. Available: {self.list_formatters()}")
        return self._formatters[name](config)

    def list_formatters(self) -> List[str]:
        return sorted(self._formatters)


# Global formatter registry
formatter_registry = FormatterRegistry()
