"""
Shared plumbing for the lab.

Subpackages:
  config   - ConfigProvider, YamlConfigProvider, JsonConfigProvider
  io       - FileReader, FileWriter; atomic local implementations

Public API: FileUtils, config, load_config, Constants, TriadLabError.
"""

from commons.file_utils import FileUtils
from commons.config import config, load_config
from commons.constants import Constants
from commons.errors import TriadLabError

from commons import io as io_pkg

__all__ = [
    "FileUtils",
    "config",
    "load_config",
    "Constants",
    "TriadLabError",
    "io_pkg",
]
