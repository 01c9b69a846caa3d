"""CLI package - argparse commands, map files and reports."""

from .commands import build_parser, main
from .report import Report, build_report, render_text
from .serialization import (
    MapFile,
    PsiFile,
    dumps,
    emit_map,
    load_map_file,
    map_file_from_map,
    map_file_matrices,
    parse_map_file,
    parse_psi_file,
    psi_file,
)

__all__ = [
    "build_parser",
    "main",
    "Report",
    "build_report",
    "render_text",
    "MapFile",
    "PsiFile",
    "dumps",
    "emit_map",
    "load_map_file",
    "map_file_from_map",
    "map_file_matrices",
    "parse_map_file",
    "parse_psi_file",
    "psi_file",
]
