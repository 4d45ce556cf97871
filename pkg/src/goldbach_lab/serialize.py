"""CSV and JSON emission with reproducible formatting.

Schemas are fixed so that identical inputs always serialize to identical
bytes:

* family scan:    family,p,n,P,ordered,unordered
* estimate scan:  n,P,bound,one_minus_2w,estimate,actual,signed_error
* twin scan:      n,pi2,estimate
* breakdown:      p,formula,divisible_oracle,only_by_oracle (+ total row)
* formula table:  p,case,value,asymptotic_only_by
* audit:          claim_id,reference,status,observed,expected

Rationals serialize as "numerator/denominator" in lowest terms.  Decimals
are fixed six-digit, round-half-even, computed from the exact rational (not
through floats), with LF line endings and UTF-8 throughout.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction

FAMILY_HEADER = ["family", "p", "n", "P", "ordered", "unordered"]
ESTIMATE_HEADER = ["n", "P", "bound", "one_minus_2w", "estimate", "actual", "signed_error"]
TWIN_HEADER = ["n", "pi2", "estimate"]
BREAKDOWN_HEADER = ["p", "formula", "divisible_oracle", "only_by_oracle"]
FORMULA_HEADER = ["p", "case", "value", "asymptotic_only_by"]
AUDIT_HEADER = ["claim_id", "reference", "status", "observed", "expected"]


def format_rational(value: Fraction) -> str:
    """Lowest-terms num/den form; the denominator is kept even when 1."""
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value, digits: int = 6) -> str:
    """Fixed-point decimal of an exact rational, round half to even."""
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10**digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r > scaled.denominator or (2 * r == scaled.denominator and q % 2 == 1):
        q += 1
    if digits == 0:
        return f"{sign}{q}"
    text = str(q).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def _blank(value) -> str:
    return "" if value is None else str(value)


def _rows_and_header(records, default_header=None):
    """Dispatch a record batch to (header, rows of strings)."""
    from .audit import ClaimOutcome
    from .estimator import EstimateRecord
    from .formulas import BreakdownReport, FormulaValue
    from .scans import ScanRecord, TwinRecord

    if isinstance(records, BreakdownReport):
        rows = [
            [str(p), str(formula), str(divisible), str(only_by)]
            for p, formula, divisible, only_by in records.rows
        ]
        rows.append(["total", "", "", str(records.total)])
        return BREAKDOWN_HEADER, rows

    records = list(records)
    if not records:
        if default_header is not None:
            return default_header, []
        raise ValueError("cannot infer a schema for an empty record batch")
    first = records[0]
    if isinstance(first, ScanRecord):
        return FAMILY_HEADER, [
            [r.family, _blank(r.p), str(r.n), str(r.total_pairs), str(r.ordered), str(r.unordered)]
            for r in records
        ]
    if isinstance(first, EstimateRecord):
        rows = []
        for r in records:
            error = r.signed_error_exact
            rows.append(
                [
                    str(r.n),
                    str(r.total_pairs),
                    str(r.bound),
                    format_rational(r.survival),
                    format_decimal(r.estimate_exact),
                    _blank(r.actual_ordered),
                    format_decimal(error) if error is not None else "",
                ]
            )
        return ESTIMATE_HEADER, rows
    if isinstance(first, TwinRecord):
        return TWIN_HEADER, [
            [str(r.n), str(r.pi2), format_decimal(r.estimate_exact)] for r in records
        ]
    if isinstance(first, FormulaValue):
        from .formulas import NOT_DIVIDES, asymptotic_only_by_exact

        rows = []
        for r in records:
            asymptotic = ""
            if r.case == NOT_DIVIDES:
                asymptotic = format_decimal(asymptotic_only_by_exact(r.n, r.p))
            rows.append([str(r.p), r.case, str(r.value), asymptotic])
        return FORMULA_HEADER, rows
    if isinstance(first, ClaimOutcome):
        return AUDIT_HEADER, [
            [r.claim_id, r.reference, r.status, r.observed, r.expected] for r in records
        ]
    raise TypeError(f"no serialization schema for {type(first).__name__}")


def render_csv(records, default_header=None) -> str:
    header, rows = _rows_and_header(records, default_header)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_value(cell: str):
    """Ints become ints, blanks become null; decimals and rationals stay
    strings so the six-digit fixed form survives the round trip."""
    if cell == "":
        return None
    try:
        return int(cell)
    except ValueError:
        return cell


def render_json(records) -> str:
    from .formulas import BreakdownReport

    header, rows = _rows_and_header(records)
    objects = [{key: _json_value(cell) for key, cell in zip(header, row)} for row in rows]
    if isinstance(records, BreakdownReport):
        total_row = objects.pop()
        payload = {"n": records.n, "rows": objects, "total": total_row["only_by_oracle"]}
    else:
        payload = objects
    return json.dumps(payload, indent=2) + "\n"


def emit(records, fmt: str = "csv", out=None) -> None:
    """Write a record batch to ``out`` (path, stream, or stdout)."""
    if fmt == "csv":
        text = render_csv(records)
    elif fmt == "json":
        text = render_json(records)
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    if out is None:
        sys.stdout.write(text)
    elif isinstance(out, (str, bytes)):
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        out.write(text)
