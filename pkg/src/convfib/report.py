"""Outcome record for an identity checked over a parameter grid."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class VerificationReport:
    """Result of comparing two independently computed sides over a grid.

    ``status`` is "pass" exactly when every cell agreed; on failure
    ``counterexample`` holds the lexicographically first failing cell with
    both side values rendered as strings.  ``cells`` counts the checks
    performed (on failure: up to and including the failing one).
    """

    identity: str
    grid: dict[str, Any]
    cells: int
    status: str
    counterexample: Optional[dict[str, Any]] = field(default=None)

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be 'pass' or 'fail', got {self.status!r}")
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("counterexample must be present exactly when status is 'fail'")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "grid": self.grid,
            "cells": self.cells,
            "status": self.status,
            "counterexample": self.counterexample,
        }


def passing(identity: str, grid: dict[str, Any], cells: int) -> VerificationReport:
    return VerificationReport(identity, grid, cells, "pass")


def failing(
    identity: str,
    grid: dict[str, Any],
    cells: int,
    params: dict[str, Any],
    lhs: object,
    rhs: object,
) -> VerificationReport:
    counterexample = {"params": params, "lhs": str(lhs), "rhs": str(rhs)}
    return VerificationReport(identity, grid, cells, "fail", counterexample)
