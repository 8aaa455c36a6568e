"""Machine-readable analysis reports with stable key order.

Reports degrade gracefully: inputs with dim L^2 > 2 keep their series data
and (with the oracle enabled) the brute-force multiplier, with the formula
block marked not applicable; non-nilpotent inputs stop after the series
block.  All numbers are exact integers; two-valued formulas appear as
sorted arrays.
"""

from __future__ import annotations

from .algebra import LieAlgebra, reduce_mod_p
from .classify import classify
from .cohomology import schur_dim_oracle
from .document import field_to_json
from .formulas import admissible, functor_report, rule_id
from .verify import cross_check

DEFAULT_SWEEP_PRIME = 5


def _dims_json(value):
    vals = admissible(value)
    return vals[0] if len(vals) == 1 else list(vals)


def build_report(
    L: LieAlgebra,
    digest: str,
    want_oracle: bool = False,
    sweep_prime: int | None = None,
    randomized_seed: int | None = None,
) -> dict:
    """Assemble the full report dict; report["ok"] is False on any mismatch."""
    series = L.series()
    report = {
        "input": {
            "digest": digest,
            "field": field_to_json(L.field),
            "dim": L.dim,
            "randomized_basis": randomized_seed is not None,
            "seed": randomized_seed,
        },
        "series": {
            "nilpotent": series.is_nilpotent,
            "class": series.nilpotency_class,
            "lower_central_dims": list(series.lower_central_dims()),
            "derived_series_dims": list(series.derived_series_dims()),
            "derived_dim": series.derived_dim,
            "center_dim": series.center.dim,
        },
    }
    if not series.is_nilpotent:
        report["classification"] = {"applicable": False, "reason": "not nilpotent"}
        report["functors"] = {"applicable": False}
        report["ok"] = True
        return report

    c = classify(L)
    if not c.in_scope:
        report["classification"] = {
            "applicable": False,
            "reason": f"dim L^2 = {c.derived_dim} > 2",
            "stem_dim": c.stem_dim,
        }
        report["functors"] = {"applicable": False}
        if want_oracle:
            report["oracle"] = {
                "schur": schur_dim_oracle(L),
                "exterior": None,
                "tensor": None,
                "epicenter_prime": None,
                "epicenter_dim": None,
                "capable": None,
            }
            report["checks"] = []
        report["ok"] = True
        return report

    report["classification"] = {
        "applicable": True,
        "family": c.family.value,
        "rank": c.rank,
        "abelian_summand": c.abelian,
        "stem_dim": c.stem_dim,
        "description": c.describe(),
    }
    fr = functor_report(c)
    report["functors"] = {
        "applicable": True,
        "rule": rule_id(c),
        "schur": _dims_json(fr.schur),
        "exterior": _dims_json(fr.exterior),
        "tensor": _dims_json(fr.tensor),
        "square": fr.square,
        "corank": _dims_json(fr.corank),
        "capable": fr.capable,
        "exterior_abelian": fr.exterior_abelian,
        "provenance": fr.provenance,
    }
    ok = True
    if want_oracle:
        cap_prime = None
        sweep_failed = None
        if L.field.is_prime_field:
            prime_used = L.field.p
        else:
            prime_used = sweep_prime or DEFAULT_SWEEP_PRIME
            try:
                reduce_mod_p(L, prime_used)  # probe: denominators must be units
                cap_prime = prime_used
            except ValueError as exc:
                sweep_failed = str(exc)
                prime_used = None
        result = cross_check(L, capability_prime=cap_prime)
        report["oracle"] = {
            "schur": result.oracle.schur,
            "exterior": result.oracle.exterior,
            "tensor": result.oracle.tensor,
            "epicenter_prime": prime_used if result.oracle.capable is not None else None,
            "epicenter_dim": result.oracle.epicenter_dim,
            "capable": result.oracle.capable,
        }
        if sweep_failed:
            report["oracle"]["sweep_error"] = sweep_failed
        report["checks"] = [
            {
                "quantity": ch.quantity,
                "formula": list(ch.formula) if isinstance(ch.formula, tuple) else ch.formula,
                "oracle": ch.oracle,
                "pass": ch.ok,
            }
            for ch in result.checks
        ]
        ok = result.ok
    report["ok"] = ok
    return report
