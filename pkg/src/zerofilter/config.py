"""Config loading: TOML file plus ``key=value`` command-line overrides.

The file vocabulary is a flat table of short keys; unknown keys are
rejected so typos fail loudly instead of silently running defaults.
An absent file path means "all defaults".  Overrides use the same key
vocabulary and are applied after the file.
"""
from __future__ import annotations

import os
from dataclasses import fields

try:
    import tomllib  # py311+
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from .errors import MissingFile, ParseError, ValidationError
from .experiments import ExperimentConfig

__all__ = ["load_config", "KEYS"]

# short key -> (dataclass field(s), kind)
KEYS = {
    "N": ("num_points", "int"),
    "L": ("half_period", "float"),
    "s": ("s", "float"),
    "cfl": ("cfl", "float"),
    "dt_max": ("dt_max", "float"),
    "breakdown_threshold": ("breakdown_threshold", "float"),
    "samples": ("sample_count", "int"),
    "t_end": ("t_end", "float"),
    "alphas": ("alphas", "float_list"),
    "taylor_t0": ("taylor_t0", "float"),
    "taylor_alphas": ("taylor_alphas", "float_list"),
    "t0": ("t0", "float"),
    "n_range": (("n_lo", "n_hi"), "range"),
    "normalize_u0": ("normalize_u0", "bool"),
    "data_ball_radius": ("data_ball_radius", "float"),
    "bench_sizes": ("bench_sizes", "int_list"),
    "bench_alphas": ("bench_alphas", "float_list"),
    "bench_reps": ("bench_reps", "int"),
}

_BOOL_WORDS = {"true": True, "false": False, "1": True, "0": False,
               "yes": True, "no": False}


def _coerce_toml(key: str, kind: str, value):
    """Validate a value read from the TOML file against the key's kind."""
    if kind == "int":
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"{key} must be an integer, got {value!r}")
        return value
    if kind == "float":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValidationError(f"{key} must be a number, got {value!r}")
        return float(value)
    if kind == "bool":
        if not isinstance(value, bool):
            raise ValidationError(f"{key} must be a boolean, got {value!r}")
        return value
    if kind in ("float_list", "int_list"):
        if not isinstance(value, (list, tuple)) or not value:
            raise ValidationError(f"{key} must be a nonempty list, got {value!r}")
        out = []
        for item in value:
            if isinstance(item, bool) or not isinstance(item, (int, float)):
                raise ValidationError(f"{key} entries must be numbers, got {item!r}")
            if kind == "int_list" and not isinstance(item, int):
                raise ValidationError(f"{key} entries must be integers, got {item!r}")
            out.append(int(item) if kind == "int_list" else float(item))
        return tuple(out)
    if kind == "range":
        if isinstance(value, str):
            return _parse_range(key, value)
        if (isinstance(value, (list, tuple)) and len(value) == 2
                and all(isinstance(v, int) and not isinstance(v, bool)
                        for v in value)):
            return (value[0], value[1])
        raise ValidationError(
            f"{key} must be \"A..B\" or a two-integer list, got {value!r}")
    raise AssertionError(kind)


def _parse_range(key: str, text: str):
    parts = text.split("..")
    if len(parts) != 2:
        raise ValidationError(f"{key} must look like \"A..B\", got {text!r}")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise ValidationError(f"{key} bounds must be integers, got {text!r}") from exc


def _coerce_text(key: str, kind: str, text: str):
    """Parse a value given as command-line override text."""
    try:
        if kind == "int":
            return int(text)
        if kind == "float":
            return float(text)
        if kind == "bool":
            word = text.strip().lower()
            if word not in _BOOL_WORDS:
                raise ValueError(text)
            return _BOOL_WORDS[word]
        if kind == "float_list":
            return tuple(float(p) for p in text.split(",") if p.strip())
        if kind == "int_list":
            return tuple(int(p) for p in text.split(",") if p.strip())
        if kind == "range":
            return _parse_range(key, text)
    except ValidationError:
        raise
    except ValueError as exc:
        raise ValidationError(f"cannot parse {key}={text!r} as {kind}") from exc
    raise AssertionError(kind)


def _apply(merged: dict, key: str, value) -> None:
    target, kind = KEYS[key]
    if kind == "range":
        merged["n_lo"], merged["n_hi"] = value
    else:
        merged[target] = value


def default_threads() -> int:
    """Thread count from the environment, else 1."""
    raw = os.environ.get("ZEROFILTER_THREADS", "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValidationError(
            f"ZEROFILTER_THREADS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValidationError(
            f"ZEROFILTER_THREADS must be >= 1, got {value}")
    return value


def load_config(path=None, overrides=(), threads=None) -> ExperimentConfig:
    """Build a validated ExperimentConfig from a file and override list."""
    merged = {}
    if path is not None:
        if not os.path.isfile(path):
            raise MissingFile(f"config file not found: {path}")
        try:
            with open(path, "rb") as fh:
                data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ParseError(f"config file {path}: {exc}") from exc
        for key, value in data.items():
            if key not in KEYS:
                raise ValidationError(
                    f"unknown config key {key!r}; known keys: "
                    + ", ".join(sorted(KEYS)))
            _apply(merged, key, _coerce_toml(key, KEYS[key][1], value))
    for item in overrides:
        if "=" not in item:
            raise ValidationError(
                f"override must look like key=value, got {item!r}")
        key, _, text = item.partition("=")
        key = key.strip()
        if key not in KEYS:
            raise ValidationError(
                f"unknown config key {key!r}; known keys: "
                + ", ".join(sorted(KEYS)))
        _apply(merged, key, _coerce_text(key, KEYS[key][1], text.strip()))

    if threads is None:
        threads = default_threads()
    known = {f.name for f in fields(ExperimentConfig)}
    assert set(merged) <= known
    return ExperimentConfig(threads=threads, **merged).validate()
