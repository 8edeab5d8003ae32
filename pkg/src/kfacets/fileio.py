"""Point files (JSON with exact rational strings) and report rendering."""

from fractions import Fraction
import json

from .constructions import ChainedConfig
from .exact import GeometryError, PointSet, as_rational


class PointFileError(ValueError):
    pass


def render_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _plain(value):
    """JSON-ready copy with Fractions as strings; floats are rejected."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, Fraction):
        return render_rational(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_plain(v) for v in items]
    if hasattr(value, "item"):  # numpy scalar
        return _plain(value.item())
    raise TypeError(f"cannot serialize {type(value).__name__} exactly")


def points_document(obj):
    if isinstance(obj, ChainedConfig):
        S = obj.points
        labels = {"kind": obj.kind, "chain": list(obj.chain), "depth": list(obj.depth)}
        if obj.subchain is not None:
            labels["subchain"] = list(obj.subchain)
        if obj.params:
            labels["params"] = _plain(obj.params)
    else:
        S, labels = obj, None
    doc = {"dim": S.dim, "points": [[render_rational(c) for c in p] for p in S.points]}
    if labels:
        doc["labels"] = labels
    return doc


def dumps_points(obj):
    return json.dumps(points_document(obj), indent=1)


def save_points(obj, path):
    with open(path, "w") as fh:
        fh.write(dumps_points(obj))
        fh.write("\n")


def _coordinate(x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise PointFileError(f"coordinate {x!r} is not an integer or a 'p/q' string")
    try:
        return as_rational(x)
    except GeometryError as exc:
        raise PointFileError(str(exc)) from None


def loads_points(text):
    """Parse a point file; returns a PointSet or, when labels are present, a ChainedConfig."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PointFileError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "points" not in doc:
        raise PointFileError("expected an object with a 'points' list")
    pts = doc["points"]
    if not isinstance(pts, list) or not pts:
        raise PointFileError("'points' must be a nonempty list")
    dim = doc.get("dim", len(pts[0]) if isinstance(pts[0], list) else None)
    if not isinstance(dim, int) or dim < 1:
        raise PointFileError("'dim' must be a positive integer")
    rows = []
    for p in pts:
        if not isinstance(p, list) or len(p) != dim:
            raise PointFileError(f"every point needs {dim} coordinates")
        rows.append([_coordinate(c) for c in p])
    S = PointSet(rows, dim)
    labels = doc.get("labels")
    if not labels:
        return S
    try:
        chain = tuple(int(c) for c in labels["chain"])
        depth = tuple(int(c) for c in labels["depth"])
        sub = labels.get("subchain")
        sub = tuple(str(c) for c in sub) if sub is not None else None
        kind = str(labels.get("kind", "simplicial"))
    except (KeyError, TypeError, ValueError) as exc:
        raise PointFileError(f"malformed labels: {exc}") from None
    if len(chain) != S.n or len(depth) != S.n or (sub is not None and len(sub) != S.n):
        raise PointFileError("labels must have one entry per point")
    params = labels.get("params", {})
    return ChainedConfig(S, kind, chain, depth, sub, params if isinstance(params, dict) else {})


def load_points(path):
    with open(path) as fh:
        return loads_points(fh.read())


def to_jsonl(records):
    return "".join(json.dumps(_plain(r)) + "\n" for r in records)


def _cell(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    plain = _plain(value)
    if isinstance(plain, list):
        return "(" + ",".join(str(v) for v in plain) + ")"
    return str(plain)


def to_table(records):
    """Aligned plain-text table; columns are the union of record keys in first-seen order."""
    if not records:
        return ""
    columns = []
    for r in records:
        for key in r:
            if key not in columns:
                columns.append(key)
    cells = [[_cell(r.get(c)) for c in columns] for r in records]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"
