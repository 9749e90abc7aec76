"""Mesh exporters (OBJ, PLY, CSV) and JSON report documents."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import SinkFailure

CSV_HEADER = ("x", "y", "F1", "F2", "F3", "u", "v", "K")
FORMATS = ("obj", "ply", "csv")


def _full(value):
    return "%.17g" % value


def _short(value):
    return "%.9g" % value


def _obj(mesh):
    out = io.StringIO()
    out.write(f"# {json.dumps(mesh.provenance, sort_keys=True)}\n")
    for p in mesh.positions.reshape(-1, 3):
        out.write("v %s %s %s\n" % tuple(_short(c) for c in p))
    for t in mesh.triangles + 1:
        out.write("f %d %d %d\n" % tuple(t))
    return out.getvalue()


def _ply(mesh):
    pos = mesh.positions.reshape(-1, 3)
    nrm = mesh.normals.reshape(-1, 3)
    quality = mesh.second_fundamental_norm_sq.ravel()
    lines = ["ply", "format ascii 1.0",
             f"comment {json.dumps(mesh.provenance, sort_keys=True)}",
             f"element vertex {len(pos)}",
             "property float x", "property float y", "property float z",
             "property float nx", "property float ny", "property float nz",
             "property float quality",
             f"element face {len(mesh.triangles)}",
             "property list uchar int vertex_indices", "end_header"]
    for p, n, q in zip(pos, nrm, quality):
        lines.append(" ".join(_short(c) for c in (*p, *n, q)))
    for t in mesh.triangles:
        lines.append("3 %d %d %d" % tuple(t))
    return "\n".join(lines) + "\n"


def _csv(mesh):
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(CSV_HEADER)
    z = mesh.z.ravel()
    pos = mesh.positions.reshape(-1, 3)
    for zz, p, u, v, k in zip(z, pos, mesh.u.ravel(), mesh.v.ravel(),
                              mesh.gauss_curvature.ravel()):
        writer.writerow([_full(c) for c in (zz.real, zz.imag, *p, u, v, k)])
    return out.getvalue()


_WRITERS = {"obj": _obj, "ply": _ply, "csv": _csv}


def render_mesh(mesh, fmt):
    try:
        return _WRITERS[fmt](mesh)
    except KeyError:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}") from None


def write_text(text, destination):
    """Write UTF-8 text to a path or a writable text/binary sink."""
    data = text.encode("utf-8")
    try:
        if isinstance(destination, (str, Path)):
            with open(destination, "wb") as fh:
                fh.write(data)
        elif isinstance(destination, io.TextIOBase):
            destination.write(text)
        else:
            destination.write(data)
    except (OSError, ValueError) as exc:
        raise SinkFailure(f"could not write to {destination!r}: {exc}") from exc
    return len(data)


def export_mesh(mesh, fmt, destination):
    """Write ``mesh`` as OBJ, PLY or CSV and return the number of bytes."""
    return write_text(render_mesh(mesh, fmt), destination)


def read_csv_samples(source):
    """Parse a CSV export (a path or the text itself) into float columns."""
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source):
        source = Path(source).read_text(encoding="utf-8")
    rows = list(csv.reader(io.StringIO(source)))
    header, body = rows[0], rows[1:]
    cols = np.array([[float(c) for c in r] for r in body]).T
    return dict(zip(header, cols))


# --------------------------------------------------------------------------
# reports

def _plain(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def check(name, measured, bound, relation, passed=None, **extra):
    """A certificate record: measured value, the bound, and the verdict.

    ``relation`` is one of ``"<", "<=", ">", ">="`` and states
    ``measured <relation> bound``.
    """
    if passed is None:
        passed = {"<": measured < bound, "<=": measured <= bound,
                  ">": measured > bound, ">=": measured >= bound}[relation]
    rec = {"name": name, "measured": measured, "bound": bound,
           "relation": relation, "pass": bool(passed)}
    rec.update(extra)
    return rec


@dataclass
class ReportDocument:
    kind: str                    # theorem | convergence | blowup | embedding
    payload: dict
    parameters: dict = field(default_factory=dict)
    tool_version: str = ""

    def __post_init__(self):
        if not self.tool_version:
            from . import __version__
            self.tool_version = __version__

    def checks(self):
        """Every certificate record found anywhere in the payload."""
        found = []

        def walk(node):
            if isinstance(node, dict):
                if {"measured", "bound", "pass"} <= node.keys():
                    found.append(node)
                for v in node.values():
                    walk(v)
            elif isinstance(node, list):
                for v in node:
                    walk(v)
        walk(self.payload)
        return found

    @property
    def passed(self):
        return all(c["pass"] for c in self.checks() if c.get("certificate", True))

    def to_json(self):
        doc = {"kind": self.kind, "tool_version": self.tool_version,
               "parameters": self.parameters, "passed": self.passed,
               "payload": self.payload}
        return json.dumps(doc, indent=2, ensure_ascii=False, allow_nan=False,
                          default=_plain) + "\n"

    def write(self, destination):
        return write_text(self.to_json(), destination)
