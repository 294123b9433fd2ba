"""Exact contraction decisions for products of matrices with a polyhedral seminorm.

Matrix entries may be ints, ``fractions.Fraction`` or strings such as
``"1/2"`` and ``".5"``. Floats are rejected. Balls are given by their normals;
``normals=None`` selects the consensus seminorm (max - min) / 2.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from ._polystab import (
    BudgetExceededError,
    ConstructionError,
    InputError,
    InternalError,
    PreconditionError,
    dstar,
    face_count,
    paz_bound,
    pstar,
)
from . import _polystab

__all__ = [
    "BudgetExceededError",
    "ConstructionError",
    "InputError",
    "InternalError",
    "PreconditionError",
    "bounds",
    "check_invariance",
    "construct",
    "decide",
    "dstar",
    "face_count",
    "lattice",
    "load_matrices",
    "oracle",
    "paz_bound",
    "pstar",
]


def _entry(value) -> str:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"matrix entries must be exact (int, Fraction or str), got {value!r}")
    if isinstance(value, (int, Fraction, str)):
        return str(value)
    raise TypeError(f"unsupported matrix entry {value!r}")


def _rows(rows: Iterable[Iterable]) -> list[list[str]]:
    return [[_entry(v) for v in row] for row in rows]


def _matrices(matrices: Sequence) -> tuple[list[list[list[str]]], list[str]]:
    if isinstance(matrices, dict):
        names = list(matrices.keys())
        mats = [_rows(m) for m in matrices.values()]
    else:
        names = []
        mats = [_rows(m) for m in matrices]
    return mats, names


def _normals(normals):
    return None if normals is None else _rows(normals)


def bounds(n: int) -> dict:
    """p*, Paz's bound B, d* and the face count per dimension for the consensus ball."""
    return json.loads(_polystab.bounds_json(n))


def lattice(*, n: int | None = None, normals=None) -> dict:
    """Double-face lattice with covers, levels, width and a maximum antichain."""
    return json.loads(_polystab.lattice_json(_normals(normals), n))


def decide(matrices, normals=None) -> dict:
    """Decides whether every infinite product contracts; matrices is a list or a name -> matrix dict."""
    mats, names = _matrices(matrices)
    return json.loads(_polystab.decide_json(mats, names, _normals(normals)))


def oracle(matrices, normals=None, max_period: int | None = None, budget: int = 10_000_000,
           first: bool = False) -> dict:
    """Brute-force check of every periodic product up to max_period (default: lattice width)."""
    mats, names = _matrices(matrices)
    return json.loads(_polystab.oracle_json(mats, names, _normals(normals), max_period, budget, first))


def check_invariance(matrices, normals=None) -> list[bool]:
    """Per matrix: whether it is nonincreasing for the seminorm."""
    mats, names = _matrices(matrices)
    return json.loads(_polystab.invariance_json(mats, names, _normals(normals)))


def construct(*, n: int | None = None, normals=None) -> tuple[dict, dict]:
    """Tight matrix family: stochastic for n, rank-one for a ball. Returns (matrix set, report)."""
    text, report = _polystab.construct(_normals(normals), n)
    return json.loads(text), json.loads(report)


def load_matrices(text: str) -> dict[str, list[list[str]]]:
    """Parses a matrix-set file body into name -> rows of canonical rational strings."""
    doc = json.loads(_polystab.parse_matrix_set(text))
    return {m["name"]: m["rows"] for m in doc["matrices"]}
