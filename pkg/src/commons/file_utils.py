"""
Facade over the io package.

All methods delegate to LocalFileReader/Writer. To write elsewhere, implement
FileReader/FileWriter and swap the module defaults.
"""

from typing import Any, Dict, List, Sequence

from commons.io.local import LocalFileReader, LocalFileWriter

_default_reader = LocalFileReader()
_default_writer = LocalFileWriter()


class FileUtils:
    """Facade for JSON and CSV artifacts."""

    @staticmethod
    def write_json_to_file(output, file_path: str, quiet: bool = False) -> None:
        """Write JSON atomically. Uses default LocalFileWriter."""
        _default_writer.write_json(output, file_path)
        if not quiet:
            print(f"📁 data written to {file_path}")

    @staticmethod
    def write_csv_to_file(header: Sequence[str], rows: Sequence[Sequence[Any]], file_path: str, quiet: bool = False) -> None:
        """Write CSV atomically with full-precision floats."""
        _default_writer.write_csv(header, rows, file_path)
        if not quiet:
            print(f"📁 {len(rows)} rows written to {file_path}")

    @staticmethod
    def load_json_from_file(file_path: str):
        """Load JSON file. Uses default LocalFileReader."""
        return _default_reader.read_json(file_path)

    @staticmethod
    def load_csv_columns(file_path: str) -> Dict[str, List[str]]:
        """Load CSV as column name -> raw strings."""
        return _default_reader.read_csv(file_path)
