"""Reading and writing monoid and M-set files.

Monoid files are JSON ({"name"?, "order", "identity", "table", "labels"?}) or
plain text ("n IDENTITY" on the first line, then n whitespace-separated rows).
M-set files are JSON ({"monoid": <inline object or file path>, "size",
"action", "labels"?}); a monoid path is resolved relative to the M-set file.
Serialization emits a canonical form: sorted keys, two-space indent, trailing
newline, no "name" — parsing and re-serializing a canonical file is the
identity on bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .monoid import FiniteMonoid, validate_monoid
from .mset import FiniteMSet, validate_mset


class ParseError(ValueError):
    pass


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"m{i}" for i in range(n))


def parse_monoid_text(text: str, source: str = "<string>") -> FiniteMonoid:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError(f"{source}: empty monoid file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"{source}: first line must be 'ORDER IDENTITY_INDEX'")
    try:
        order, identity = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"{source}: first line must hold two integers") from None
    tokens = " ".join(lines[1:]).split()
    if len(tokens) != order * order:
        raise ParseError(f"{source}: expected {order * order} table entries, "
                         f"got {len(tokens)}")
    try:
        flat = [int(tok) for tok in tokens]
    except ValueError:
        raise ParseError(f"{source}: non-integer table entry") from None
    table = [flat[i * order:(i + 1) * order] for i in range(order)]
    return validate_monoid(order, identity, table)


def _monoid_from_obj(obj, source: str) -> FiniteMonoid:
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: monoid object must be a JSON object")
    for key in ("order", "identity", "table"):
        if key not in obj:
            raise ParseError(f"{source}: missing required field {key!r}")
    labels = obj.get("labels")
    if labels is not None and (not isinstance(labels, list)
                               or not all(isinstance(s, str) for s in labels)):
        raise ParseError(f"{source}: labels must be a list of strings")
    return validate_monoid(obj["order"], obj["identity"], obj["table"], labels)


def parse_monoid_file(path) -> FiniteMonoid:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})") from None
        monoid = _monoid_from_obj(obj, str(path))
    else:
        monoid = parse_monoid_text(text, str(path))
    if monoid.labels is None:
        monoid = FiniteMonoid(monoid.order, monoid.identity, monoid.table,
                              _default_labels(monoid.order))
    return monoid


def monoid_to_obj(M: FiniteMonoid, name: str | None = None) -> dict:
    obj = {
        "order": M.order,
        "identity": M.identity,
        "table": [list(row) for row in M.table],
        "labels": [M.label(i) for i in M.elements()],
    }
    if name is not None:
        obj["name"] = name
    return obj


def serialize_monoid(M: FiniteMonoid, name: str | None = None) -> str:
    return json.dumps(monoid_to_obj(M, name), indent=2, sort_keys=True) + "\n"


def serialize_monoid_text(M: FiniteMonoid) -> str:
    lines = [f"{M.order} {M.identity}"]
    lines += [" ".join(str(v) for v in row) for row in M.table]
    return "\n".join(lines) + "\n"


def parse_mset_file(path) -> FiniteMSet:
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: M-set file must hold a JSON object")
    for key in ("monoid", "size", "action"):
        if key not in obj:
            raise ParseError(f"{path}: missing required field {key!r}")
    spec = obj["monoid"]
    if isinstance(spec, str):
        monoid = parse_monoid_file((path.parent / spec) if not Path(spec).is_absolute()
                                   else spec)
    else:
        monoid = _monoid_from_obj(spec, str(path))
        if monoid.labels is None:
            monoid = FiniteMonoid(monoid.order, monoid.identity, monoid.table,
                                  _default_labels(monoid.order))
    labels = obj.get("labels")
    if labels is not None and (not isinstance(labels, list)
                               or not all(isinstance(s, str) for s in labels)):
        raise ParseError(f"{path}: labels must be a list of strings")
    mset = validate_mset(monoid, obj["size"], obj["action"], labels)
    if mset.labels is None:
        mset = FiniteMSet(mset.monoid, mset.size, mset.action,
                          tuple(f"x{i}" for i in range(mset.size)))
    return mset


def serialize_mset(X: FiniteMSet) -> str:
    obj = {
        "monoid": monoid_to_obj(X.monoid),
        "size": X.size,
        "action": [list(row) for row in X.action],
        "labels": [X.label(i) for i in range(X.size)],
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
