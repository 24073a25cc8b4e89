# файл dataset_io.py

"""
Tables and plot datasets for g-lengths and smallest integers of a given length.

CSV output is comma separated with a header row and LF line endings; every field is an
integer, so nothing is quoted.
"""

import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from errors import InvalidArgument
from gadic import balanced_digits, g_length, lambda_value
from schemas import BFileRecord, TableSpec

logger = logging.getLogger(__name__)


def lambda_rows(spec: TableSpec) -> List[List[int]]:
    """Row k - 1 holds lambda_value(g, k) for every base g of the table spec."""
    return [[lambda_value(g, k) for g in spec.bases] for k in range(1, spec.k_max + 1)]


def _csv(header: List[str], rows: List[List[int]]) -> str:
    lines = [",".join(header)] + [",".join(map(str, row)) for row in rows]
    return "\n".join(lines) + "\n"


def _aligned(header: List[str], rows: List[List[int]]) -> str:
    cells = [header] + [[str(value) for value in row] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(header))]
    return "".join(" ".join(cell.rjust(width) for cell, width in zip(line, widths)) + "\n" for line in cells)


def emit_lambda_table(spec: TableSpec) -> str:
    """
    Formats the table of smallest integers of each length.

    Row k, column g holds lambda_value(g, k). The default TableSpec gives the table for the
    primes below 30 and k up to 20.

    Args:
        spec (TableSpec): Bases, k_max and output format.

    Returns:
        str: The table as CSV, JSON or right-aligned text.
    """
    rows = lambda_rows(spec)
    if spec.output_format == "json":
        return json.dumps({"bases": spec.bases, "k_max": spec.k_max, "values": rows}) + "\n"
    header = ["k"] + [str(g) for g in spec.bases]
    numbered = [[k] + row for k, row in enumerate(rows, start=1)]
    if spec.output_format == "csv":
        return _csv(header, numbered)
    return _aligned(header, numbered)


def length_vs_g(n: int, g_lo: int, g_hi: int) -> List[Tuple[int, int]]:
    """
    Pairs (g, g_length(n, g)) for every g in [g_lo, g_hi].

    Raises:
        InvalidArgument: If n is 0, g_lo < 2 or the range is empty.
    """
    if n == 0:
        raise InvalidArgument("n must be nonzero")
    if g_lo < 2 or g_hi < g_lo:
        raise InvalidArgument(f"base range [{g_lo}, {g_hi}] must be non-empty and start at 2 or above")
    return [(g, g_length(n, g)) for g in range(g_lo, g_hi + 1)]


def emit_length_vs_g(n: int, g_lo: int, g_hi: int) -> str:
    """
    CSV of g-length against the base for a fixed n.

    Args:
        n (int): A nonzero integer.
        g_lo (int): First base, at least 2.
        g_hi (int): Last base.

    Returns:
        str: Header ``g,length`` and one row per base.
    """
    return _csv(["g", "length"], [list(row) for row in length_vs_g(n, g_lo, g_hi)])


def length_histogram(g: int, n_max: int) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """
    Lengths of 1..n_max together with the smallest-integer curve below n_max.

    Args:
        g (int): The base, at least 2.
        n_max (int): Largest integer, at least 1.

    Raises:
        InvalidArgument: If g < 2 or n_max < 1.

    Returns:
        Tuple: (n, g_length(n, g)) points and (k, lambda_value(g, k)) points with lambda <= n_max.
    """
    if n_max < 1:
        raise InvalidArgument(f"n_max must be at least 1, got {n_max}")
    points = [(n, sum(abs(d) for d in balanced_digits(n, g))) for n in range(1, n_max + 1)]
    overlay = []
    k = 1
    while True:
        value = lambda_value(g, k)
        if value > n_max:
            break
        overlay.append((k, value))
        k += 1
    return points, overlay


def emit_length_histogram(g: int, n_max: int) -> str:
    """
    CSV with ``series,x,y`` rows: ``length,n,l`` for every n, then ``lambda,k,value``.

    Args:
        g (int): The base, at least 2.
        n_max (int): Largest integer, at least 1.

    Returns:
        str: The dataset.
    """
    points, overlay = length_histogram(g, n_max)
    rows = [["length", n, length] for n, length in points] + [["lambda", k, value] for k, value in overlay]
    return _csv(["series", "x", "y"], rows)


def bfile_records(g: int, count: int) -> List[BFileRecord]:
    """
    The first count terms of k -> lambda_value(g, k).

    Raises:
        InvalidArgument: If g < 2 or count < 1.
    """
    if count < 1:
        raise InvalidArgument(f"count must be at least 1, got {count}")
    return [BFileRecord(index=k, value=lambda_value(g, k)) for k in range(1, count + 1)]


def emit_bfile(g: int, count: int) -> str:
    """
    OEIS b-file text: one ``n a(n)`` line per term.

    Args:
        g (int): The base, at least 2.
        count (int): Number of terms, at least 1.

    Returns:
        str: The b-file.
    """
    return "".join(f"{record.index} {record.value}\n" for record in bfile_records(g, count))


def parse_bfile(text: str) -> List[BFileRecord]:
    """
    Reads an OEIS b-file, skipping blank lines and ``#`` comments.

    Raises:
        InvalidArgument: If a line is malformed or the indices are not consecutive.
    """
    records = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            index, value = int(parts[0]), int(parts[1])
        except (IndexError, ValueError) as exc:
            raise InvalidArgument(f"malformed b-file line {number}: {line!r}") from exc
        if records and index != records[-1].index + 1:
            raise InvalidArgument(f"b-file index {index} on line {number} does not follow {records[-1].index}")
        records.append(BFileRecord(index=index, value=value))
    return records


def write_output(text: str, path: Optional[str] = None) -> None:
    """Writes a dataset to path, or to standard output when path is None."""
    if path is None:
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8", newline="\n")
    logger.info("wrote %d bytes to %s", len(text), path)
