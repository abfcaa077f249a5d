# External imports
import io
import os
import csv
import json
import logging
import sys

import numpy as np

__all__ = ["SIGNIFICANT_DIGITS", "format_number", "round_floats", "to_json", "to_csv", "emit"]

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12

def format_number(value):
    """Locale-independent text for CSV cells: 12 significant digits, empty for None."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".{}g".format(SIGNIFICANT_DIGITS))
    return str(value)

def round_floats(obj):
    """Round every float in a JSON-like structure to 12 significant digits."""
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return round_floats(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(format(float(obj), ".{}g".format(SIGNIFICANT_DIGITS)))
    return obj

def to_json(obj):
    return json.dumps(round_floats(obj), indent=2, allow_nan=False) + "\n"

def to_csv(columns, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_number(row.get(c)) for c in columns])

    return buffer.getvalue()

def emit(text, out=None):
    """Write a rendered report to `out`, or to standard output."""
    if out is None:
        sys.stdout.write(text)
        return

    directory = os.path.dirname(out)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)

    with open(out, "w", encoding="utf-8", newline="") as fp:
        fp.write(text)

    logger.info("Saved report: %s", out)
