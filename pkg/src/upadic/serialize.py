"""JSON/CSV emission helpers.  Integers serialize as decimal strings (the
acceptance runs produce values far beyond 10^3000), valuations as "num/den"
or "inf"; output is deterministic for identical inputs.
"""

import json
import sys

from fractions import Fraction

from .scalars import Val, QuadInt3

# coefficients in the large runs exceed the default string-conversion guard
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(2_000_000)


def int_str(x):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)
    return str(x)


def val_str(v):
    if isinstance(v, Val):
        return str(v)
    if v is None:
        return "inf"
    return str(Fraction(v))


def scalar_json(x):
    if isinstance(x, QuadInt3):
        return {"a": str(x.a), "b": str(x.b)}
    return int_str(x)


def series_json(f):
    return {"lowest_exponent": f.start, "precision": f.prec,
            "coefficients": [int_str(c) for c in f.c]}


def matrix_json(m):
    return {"prime": m.p, "size": m.n, "basis": m.basis,
            "provenance": m.provenance, "sign_convention": m.sign_convention,
            "entries": [[scalar_json(x) for x in row] for row in m.rows]}


def bipoly_json(bp):
    return {"terms": [{"i": i, "j": j, "coeff": int_str(c)}
                      for (i, j), c in sorted(bp.terms.items())]}


def charseries_json(q, records=None):
    out = {"prime": q.p, "weight": q.weight, "truncation_size": q.trunc_size,
           "coefficients": [int_str(c) for c in q.coeffs]}
    if records is not None:
        out["certified"] = [{"m": r.m, "valuation": val_str(r.v_obs),
                             "truncation_bound": val_str(r.bound),
                             "certified": r.certified} for r in records]
    return out


def polygon_json(poly):
    return {"vertices": [[m, val_str(v)] for m, v in poly.vertices],
            "sides": [{"slope": val_str(s), "multiplicity": mult}
                      for s, mult in poly.sides]}


def dump_json(obj, path=None):
    text = json.dumps(obj, indent=2, sort_keys=False)
    if path is None:
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def dump_csv(rows, header, path=None):
    lines = [",".join(header)]
    lines += [",".join(str(x) for x in row) for row in rows]
    text = "\n".join(lines)
    if path is None:
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text
