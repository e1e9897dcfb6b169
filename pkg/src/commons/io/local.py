"""Local filesystem implementation of FileReader and FileWriter.

Writes go to a temp file in the target directory and are renamed into place, so a
reader never sees a half-written catalog or trajectory.
"""

import csv
import io
import json
import os
import tempfile
from typing import Any, Dict, List, Sequence

from commons.constants import Constants


def format_cell(value: Any, float_format: str = Constants.CSV_FLOAT_FORMAT) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, float_format)
    try:
        import numpy as np
        if isinstance(value, np.floating):
            return format(float(value), float_format)
        if isinstance(value, np.integer):
            return str(int(value))
    except ImportError:
        pass
    return str(value)


class LocalFileReader:
    """Read from local filesystem."""

    def read_text(self, path: str) -> str | None:
        try:
            with open(path, "r", encoding="utf-8") as f:
                return f.read()
        except FileNotFoundError:
            return None

    def read_json(self, path: str) -> Any:
        text = self.read_text(path)
        if text is None:
            raise FileNotFoundError(f"JSON file not found: {path}")
        return json.loads(text)

    def read_csv(self, path: str) -> Dict[str, List[str]]:
        """Return column name -> list of raw cell strings."""
        if not os.path.exists(path):
            raise FileNotFoundError(f"CSV file not found: {path}")
        with open(path, "r", encoding="utf-8", newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header is None:
                return {}
            columns: Dict[str, List[str]] = {name: [] for name in header}
            for row in reader:
                for name, cell in zip(header, row):
                    columns[name].append(cell)
        return columns


class LocalFileWriter:
    """Write to local filesystem."""

    def __init__(self, float_format: str = Constants.CSV_FLOAT_FORMAT):
        self.float_format = float_format

    def write_text(self, text: str, path: str) -> None:
        self.ensure_dir(path)
        dirpath = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=dirpath, prefix=".tmp-", suffix=os.path.basename(path))
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def write_json(self, data: Any, path: str) -> None:
        if isinstance(data, str):
            data = json.loads(data)
        self.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", path)

    def write_csv(self, header: Sequence[str], rows: Sequence[Sequence[Any]], path: str) -> None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(header))
        for row in rows:
            writer.writerow([format_cell(v, self.float_format) for v in row])
        self.write_text(buf.getvalue(), path)

    def ensure_dir(self, path: str) -> None:
        dirpath = os.path.dirname(path)
        if dirpath:
            os.makedirs(dirpath, exist_ok=True)
