"""Deterministic emission of experiment results to CSV and JSON.

Byte-stability contract: rows are sorted by case id, floats are written
with ``repr`` (shortest round-trip form), line endings are ``\\n``, and
summaries use ``json.dumps(indent=2, sort_keys=True)``.  Nothing that
varies run to run (timestamps, wall times, thread counts) goes into the
CSV or summary; such values live only in the run manifest.
"""
from __future__ import annotations

import json
import os
import time

from .errors import IoError
from .experiments import ExperimentResult

__all__ = ["format_cell", "write_result", "write_json"]


def format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "pass" if value else "fail"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    raise TypeError(f"unsupported cell type: {type(value).__name__}")


def write_result(result: ExperimentResult, out_dir: str) -> dict:
    """Write <name>.csv and <name>.summary.json; return their paths."""
    try:
        os.makedirs(out_dir, exist_ok=True)
        csv_path = os.path.join(out_dir, f"{result.name}.csv")
        lines = [",".join(result.columns)]
        for row in result.sorted_rows():
            lines.append(",".join(format_cell(row[col]) for col in result.columns))
        with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")

        summary = {
            "experiment": result.name,
            "status": "ok" if result.rows else "no-cases",
            "all_pass": result.all_pass(),
            "verdicts": result.verdicts,
            "constants": result.constants,
            "columns": list(result.columns),
            "num_rows": len(result.rows),
            "fingerprint": result.fingerprint,
        }
        summary_path = os.path.join(out_dir, f"{result.name}.summary.json")
        write_json(summary, summary_path)
    except OSError as exc:
        raise IoError(f"cannot write results to {out_dir}: {exc}") from exc
    return {"csv": csv_path, "summary": summary_path}


def write_json(payload: dict, path: str) -> str:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
    return path


def write_manifest(out_dir: str, subcommand: str, cfg_dict: dict,
                   elapsed_seconds: float, exit_code: int) -> str:
    """Run provenance; contains wall-clock data, never byte-compared."""
    payload = {
        "subcommand": subcommand,
        "config": cfg_dict,
        "elapsed_seconds": elapsed_seconds,
        "finished_unix": time.time(),
        "exit_code": exit_code,
    }
    return write_json(payload, os.path.join(out_dir, "run_manifest.json"))
