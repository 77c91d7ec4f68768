"""
Deterministic output writers
CSV with 17 significant digits, schema-versioned JSON and a polyline SVG
"""

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence

import numpy as np

JSON_SCHEMA_VERSION = 1


def format_float(value: float) -> str:
    """Locale-independent float with 17 significant digits"""
    return f"{float(value):.17g}"


def _cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if value is None:
        return ""
    return str(value)


def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars/arrays and non-finite floats for json.dumps"""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Render an RFC-4180 CSV document with a header row"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def render_json(payload: Dict[str, Any]) -> str:
    """Render a schema-versioned JSON document"""
    document = {"schema": JSON_SCHEMA_VERSION}
    document.update(to_jsonable(payload))
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def render_svg(x: Sequence[float], y: Sequence[float], width: int = 640, height: int = 480,
               stroke: str = "#1f77b4") -> str:
    """
    Render a single polyline with an autoscaled viewBox.

    Args:
        x: Abscissae in data units
        y: Ordinates in data units (drawn upwards)
        width: Pixel width
        height: Pixel height
        stroke: Line colour

    Returns:
        SVG 1.1 document
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x_min, x_max = float(x.min()), float(x.max())
    y_min, y_max = float(y.min()), float(y.max())
    span_x = x_max - x_min or 1.0
    span_y = y_max - y_min or 1.0
    pad_x, pad_y = 0.05 * span_x, 0.05 * span_y

    view = (x_min - pad_x, -(y_max + pad_y), span_x + 2 * pad_x, span_y + 2 * pad_y)
    points = " ".join(f"{format_float(a)},{format_float(-b)}" for a, b in zip(x, y))
    stroke_width = format_float(0.003 * max(view[2], view[3]))
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{" ".join(format_float(v) for v in view)}">\n'
        f'  <polyline fill="none" stroke="{stroke}" stroke-width="{stroke_width}" points="{points}"/>\n'
        '</svg>\n'
    )


def write_text(text: str, output: Optional[str]) -> None:
    """Write to a file path, or to stdout when output is None or '-'"""
    if output in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
