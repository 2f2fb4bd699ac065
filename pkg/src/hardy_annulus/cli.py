"""Command-line front end.

Every invocation writes a single record {command, inputs, outputs} as
JSON (default) or CSV (grid commands only).  Output is deterministic:
floats are emitted with 17 significant digits, so each scalar re-parses
to within one ulp of the computed value.  With --url the computation is
delegated to a running service; otherwise it runs in process.

Exit codes: 0 success, 2 domain or usage error, 3 numerical failure.

The parser is deliberately hand-rolled: values such as ``--b -0.5,0``
begin with a dash, which stock option parsers reject as an unknown flag.
Here the token after a flag is always its value.
"""

from __future__ import annotations

import json
import math
import os
import sys

import httpx
from pydantic import ValidationError

from .errors import DomainError, NonConvergence, SingularSystem
from .service.handlers import HANDLERS

_FLOAT = "float"
_INT = "int"
_STR = "str"
_COMPLEX = "complex"
_FLOATS = "float list"
_SWITCH = "switch"

_SERIES_FLAGS = {"tol": _FLOAT, "max-terms": _INT}

_COMMANDS: dict[str, dict[str, dict[str, str]]] = {
    "jk": {
        "required": {"R": _FLOAT, "b": _COMPLEX, "t": _COMPLEX},
        "optional": {"method": _STR, **_SERIES_FLAGS},
    },
    "kernel": {
        "required": {"R": _FLOAT, "alpha": _FLOAT, "z": _COMPLEX, "w": _COMPLEX},
        "optional": dict(_SERIES_FLAGS),
    },
    "garabedian": {
        "required": {"R": _FLOAT, "alpha": _FLOAT, "z": _COMPLEX, "w": _COMPLEX},
        "optional": dict(_SERIES_FLAGS),
    },
    "curvature": {
        "required": {"R": _FLOAT, "alpha": _FLOAT, "zeta": _COMPLEX},
        "optional": {"extremality-tol": _FLOAT, **_SERIES_FLAGS},
    },
    "curvature-grid": {
        "required": {"R": _FLOAT, "alpha": _FLOAT, "rmin": _FLOAT, "rmax": _FLOAT, "n": _INT},
        "optional": {"extremality-tol": _FLOAT, **_SERIES_FLAGS},
    },
    "extremal-alpha": {
        "required": {"R": _FLOAT, "zeta": _COMPLEX},
        "optional": {},
    },
    "extremal-check": {
        "required": {"R": _FLOAT, "zeta": _COMPLEX},
        "optional": {"alpha": _FLOAT, "extremality-tol": _FLOAT, **_SERIES_FLAGS},
    },
    "phi": {
        "required": {},
        "optional": {"omegas": _FLOATS, "R": _FLOAT, "zeta": _COMPLEX},
    },
    "weights": {
        "required": {"R": _FLOAT, "alpha": _FLOAT},
        "optional": {"nmin": _INT, "nmax": _INT},
    },
    "solve-extremal": {
        "required": {"R": _FLOAT, "alpha": _FLOAT, "zeta": _COMPLEX},
        "optional": {"N": _INT, "include-coefficients": _SWITCH, **_SERIES_FLAGS},
    },
    "ahlfors-check": {
        "required": {"R": _FLOAT, "zeta": _COMPLEX},
        "optional": {"samples": _INT, **_SERIES_FLAGS},
    },
}

_GRID_COMMANDS = {"curvature-grid", "weights"}
_CSV_HEADERS = {"curvature-grid": ("r", "curvature_log", "bound", "gap"),
                "weights": ("n", "weight")}
_FIELD_NAMES = {"nmin": "n_min", "nmax": "n_max"}


class _UsageError(Exception):
    pass


class _NonFiniteOutput(Exception):
    pass


def _usage() -> str:
    names = " ".join(sorted(_COMMANDS))
    return (
        "usage: hardy <command> [--flag value ...] [--format json|csv] [--url URL]\n"
        f"commands: {names}\n"
        "complex values are written re,im; --format csv applies to grid commands only"
    )


def _parse_complex(text: str) -> dict:
    parts = text.split(",")
    if len(parts) == 1:
        return {"re": float(parts[0]), "im": 0.0}
    if len(parts) == 2:
        return {"re": float(parts[0]), "im": float(parts[1])}
    raise ValueError(f"expected re,im but got {text!r}")


def _convert(kind: str, text: str, flag: str):
    try:
        if kind == _FLOAT:
            return float(text)
        if kind == _INT:
            return int(text)
        if kind == _COMPLEX:
            return _parse_complex(text)
        if kind == _FLOATS:
            return [float(part) for part in text.split(",") if part]
        return text
    except ValueError:
        raise _UsageError(f"bad value for --{flag}: {text!r} (expected {kind})")


def _parse(argv: list[str]):
    if not argv:
        raise _UsageError("missing command")
    command = argv[0]
    if command in ("-h", "--help", "help"):
        return None, None, None, None
    if command not in _COMMANDS:
        raise _UsageError(f"unknown command: {command}")
    spec = _COMMANDS[command]
    flags = {**spec["required"], **spec["optional"]}
    values: dict[str, object] = {}
    fmt = "json"
    url = None
    i = 1
    while i < len(argv):
        token = argv[i]
        if not token.startswith("--"):
            raise _UsageError(f"unexpected argument: {token}")
        name = token[2:]
        inline = None
        if "=" in name:
            name, inline = name.split("=", 1)
        if name in ("format", "url"):
            kind = _STR
        elif name in flags:
            kind = flags[name]
        else:
            raise _UsageError(f"unknown flag for {command}: --{name}")
        if kind == _SWITCH:
            if inline is not None:
                raise _UsageError(f"--{name} takes no value")
            value = True
            i += 1
        elif inline is not None:
            value = _convert(kind, inline, name)
            i += 1
        else:
            if i + 1 >= len(argv):
                raise _UsageError(f"--{name} needs a value")
            value = _convert(kind, argv[i + 1], name)
            i += 2
        if name == "format":
            if value not in ("json", "csv"):
                raise _UsageError(f"--format must be json or csv, not {value!r}")
            fmt = value
        elif name == "url":
            url = str(value)
        else:
            values[_FIELD_NAMES.get(name, name.replace("-", "_"))] = value
    missing = [f for f in spec["required"] if _FIELD_NAMES.get(f, f.replace("-", "_")) not in values]
    if missing:
        raise _UsageError(f"{command} requires --{missing[0]}")
    if fmt == "csv" and command not in _GRID_COMMANDS:
        raise _UsageError("--format csv applies only to curvature-grid and weights")
    if "tol" in flags and "tol" not in values:
        env = os.environ.get("HARDY_TOL")
        if env is not None:
            values["tol"] = _convert(_FLOAT, env, "tol (from HARDY_TOL)")
    return command, values, fmt, url


def _float_text(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise _NonFiniteOutput("non-finite value in output")
    text = format(x, ".17g")
    if "e" not in text and "." not in text:
        text += ".0"
    return text


def _emit_json(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _float_text(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_emit_json(v) for v in value) + "]"
    if isinstance(value, dict):
        items = (
            f"{json.dumps(str(k))}:{_emit_json(v)}"
            for k, v in value.items()
            if v is not None
        )
        return "{" + ",".join(items) + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _emit_csv(command: str, record: dict) -> str:
    header = _CSV_HEADERS[command]
    lines = [",".join(header)]
    for row in record["outputs"]["rows"]:
        cells = []
        for key in header:
            cell = row[key]
            cells.append(str(cell) if isinstance(cell, int) else _float_text(cell))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _scrub_error_detail(payload) -> str:
    if isinstance(payload, dict):
        if "message" in payload:
            return str(payload["message"])
        if "detail" in payload:
            detail = payload["detail"]
            if isinstance(detail, list) and detail and isinstance(detail[0], dict):
                first = detail[0]
                where = ".".join(str(p) for p in first.get("loc", ()) if p != "body")
                return f"{where}: {first.get('msg', 'invalid input')}"
            return str(detail)
    return "service error"


def _run_remote(url: str, command: str, payload: dict) -> tuple[int, dict | str]:
    endpoint = url.rstrip("/") + "/" + command
    try:
        response = httpx.post(endpoint, json=payload, timeout=120.0)
    except httpx.HTTPError as exc:
        return 2, f"cannot reach service at {url}: {exc}"
    if response.status_code == 200:
        return 0, response.json()
    try:
        body = response.json()
    except ValueError:
        body = {}
    message = _scrub_error_detail(body)
    code = 2 if 400 <= response.status_code < 500 else 3
    return code, message


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else list(argv)
    try:
        command, values, fmt, url = _parse(args)
    except _UsageError as exc:
        print(f"hardy: {exc}", file=sys.stderr)
        print(_usage(), file=sys.stderr)
        return 2
    if command is None:
        print(_usage())
        return 0

    request_model, handler = HANDLERS[command]
    if url is not None:
        try:
            request = request_model(**values)
        except ValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(p) for p in first["loc"])
            print(f"hardy: {where}: {first['msg']}", file=sys.stderr)
            return 2
        code, result = _run_remote(url, command, request.model_dump(mode="json"))
        if code != 0:
            print(f"hardy: {result}", file=sys.stderr)
            return code
        record = result
    else:
        try:
            request = request_model(**values)
        except ValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(p) for p in first["loc"])
            print(f"hardy: {where}: {first['msg']}", file=sys.stderr)
            return 2
        try:
            response = handler(request)
        except DomainError as exc:
            print(f"hardy: {exc}", file=sys.stderr)
            return 2
        except (NonConvergence, SingularSystem) as exc:
            print(f"hardy: {exc}", file=sys.stderr)
            return 3
        record = response.model_dump(mode="json")

    try:
        if fmt == "csv":
            text = _emit_csv(command, record)
        else:
            text = _emit_json(record) + "\n"
    except _NonFiniteOutput as exc:
        print(f"hardy: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
