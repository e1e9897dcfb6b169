"""Protocols for file I/O. Implement these to add other storage backends."""

from typing import Any, Dict, List, Protocol, Sequence


class FileReader(Protocol):
    """Read text, JSON or numeric CSV from a source."""

    def read_text(self, path: str) -> str | None:
        ...

    def read_json(self, path: str) -> Any:
        ...

    def read_csv(self, path: str) -> Dict[str, List[str]]:
        ...


class FileWriter(Protocol):
    """Write text, JSON or CSV to a destination."""

    def write_text(self, text: str, path: str) -> None:
        ...

    def write_json(self, data: Any, path: str) -> None:
        ...

    def write_csv(self, header: Sequence[str], rows: Sequence[Sequence[Any]], path: str) -> None:
        ...

    def ensure_dir(self, path: str) -> None:
        ...
