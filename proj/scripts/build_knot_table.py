#!/usr/bin/env python3
"""Build data/knots.jsonl and tests/data/knotinfo_reference.jsonl from a
KnotInfo export (knotinfo_data_complete.csv, '|' separated).

    pip download database_knotinfo  # wheel contains csv_data/
    python3 scripts/build_knot_table.py path/to/knotinfo_data_complete.csv

Chirality: records follow KnotInfo, except those listed in MIRRORED, which
are stored as the KnotInfo mirror. Grids in KnotInfo use the opposite
crossing convention, so they are reflected left-to-right unless the record
is mirrored. Every representation is checked against the Kauffman
polynomial by the C++ test suite (records_test).
"""

import argparse
import csv
import json
import re
import sys
from pathlib import Path

import sympy

ALTERNATING_UP_TO_8 = (
    ["3_1", "4_1", "5_1", "5_2"]
    + [f"6_{i}" for i in range(1, 4)]
    + [f"7_{i}" for i in range(1, 8)]
    + [f"8_{i}" for i in range(1, 19)]
)
OTHERS = (
    ["8_19", "8_20", "8_21", "9_42", "9_49", "10_124", "10_132", "10_136", "10_150", "10_156"]
    + [f"11n_{i}" for i in (12, 19, 20, 37, 38, 50, 57, 86, 88, 92, 126)]
)

# Left-handed trefoil (tb = -6) is the standard fixture. KnotInfo's 10_136 and
# 9_42 are the mirrors of the Rolfsen-table knots of those names: the improved
# Kauffman bound applies to Rolfsen's 10_136, and the sl exception sits on the
# mirror of Rolfsen's 9_42.
MIRRORED = {"3_1", "9_42", "10_136"}

ARC_TABLE = "arc index tabulation for knots up to 11 crossings (KnotInfo arc_index)"
TORUS = "classification of Legendrian torus knots; 10_124 is T(3,5)"
KNOTINFO_TB = "KnotInfo thurston_bennequin_number"
CABLE = "upper bound for the framed double computed externally (diagram beyond desk scale)"
BRAID = "KnotInfo braid_index"

# Values that do not follow from the bounds computed here. Keys are record
# names with the record's chirality; "_mirror" fields refer to the mirror.
RECORDED = {
    "9_42": {
        "braid_index": (4, BRAID),
        "cable_sl_mirror": ({"framing": 0, "upper": -8}, CABLE),
    },
    "9_49": {"cable_sl_mirror": ({"framing": 0, "upper": -20}, CABLE)},
    "10_124": {
        "alpha": (8, ARC_TABLE),
        "tb": (7, TORUS),
        "tb_mirror": (-15, TORUS),
    },
    "10_132": {
        "alpha": (9, ARC_TABLE),
        "cable_tb_mirror": ({"framing": 3, "upper": 5}, CABLE),
        "cable_sl_mirror": ({"framing": 0, "upper": 0}, CABLE),
    },
    "10_150": {"cable_sl_mirror": ({"framing": 0, "upper": -16}, CABLE)},
    "10_156": {"cable_sl": ({"framing": 0, "upper": -12}, CABLE)},
    "11n_12": {"alpha": (10, ARC_TABLE), "cable_tb": ({"framing": 3, "upper": 3}, CABLE)},
    "11n_19": {"alpha": (9, ARC_TABLE)},
    "11n_20": {"sl": (-7, "extended maximal self-linking tabulation for 11 crossing knots")},
    "11n_37": {"sl_mirror": (-3, "extended maximal self-linking tabulation for 11 crossing knots")},
    "11n_38": {"alpha": (9, ARC_TABLE), "cable_tb_mirror": ({"framing": 1, "upper": -6}, CABLE)},
    "11n_57": {"alpha": (10, ARC_TABLE), "cable_tb_mirror": ({"framing": -7, "upper": -39}, CABLE)},
    "11n_86": {"sl": (-3, "extended maximal self-linking tabulation for 11 crossing knots")},
    "11n_88": {"alpha": (10, ARC_TABLE), "cable_tb_mirror": ({"framing": -7, "upper": -39}, CABLE)},
    "11n_92": {"alpha": (10, ARC_TABLE), "cable_tb": ({"framing": -1, "upper": -13}, CABLE)},
}

# Grids pinned to a particular orientation.
GRID_OVERRIDE = {"3_1": ([3, 4, 5, 1, 2], [1, 2, 3, 4, 5])}

A, Z, V, T, Q = sympy.symbols("a z v t q")


def short_name(ki_name):
    return ki_name.replace("n_", "n").replace("a_", "a")


def sympy_expr(text):
    text = text.strip().replace("^", "**")
    return sympy.sympify(text, locals={"a": A, "z": Z, "v": V, "t": T, "q": Q})


def laurent_terms(expr, x, y):
    """Dict (ex, ey) -> int for a Laurent polynomial in x, y."""
    out = {}
    for term, coeff in sympy.expand(expr).as_coefficients_dict().items():
        powers = term.as_powers_dict()
        ex, ey = int(powers.get(x, 0)), int(powers.get(y, 0))
        rest = set(powers) - {x, y, sympy.Integer(1)}
        if rest:
            raise ValueError(f"unexpected factor {rest} in {expr}")
        out[(ex, ey)] = out.get((ex, ey), 0) + int(coeff)
    return {k: v for k, v in out.items() if v != 0}


def canonical(terms, names=("a", "z")):
    if not terms:
        return "0"
    return " + ".join(f"{c} {names[0]}^{e1} {names[1]}^{e2}" for (e1, e2), c in sorted(terms.items()))


def kauffman_terms(text, mirrored):
    terms = laurent_terms(sympy_expr(text), A, Z)
    if mirrored:
        terms = {(-e1, e2): c for (e1, e2), c in terms.items()}
    return terms


def homfly_terms(text, mirrored):
    # KnotInfo uses v with v P(L-) ... ; P(a, z) = P_KnotInfo(v = 1/a, z).
    terms = laurent_terms(sympy_expr(text), V, Z)
    terms = {(-e1, e2): c for (e1, e2), c in terms.items()}
    if mirrored:
        terms = {(-e1, e2): (c if e2 % 2 == 0 else -c) for (e1, e2), c in terms.items()}
    return terms


def khovanov_ranks(text, mirrored):
    """Free part of the unreduced integral Khovanov polynomial as (i, j, rank)."""
    ranks = {}
    for raw in re.split(r"\+(?![^()]*\))", text.replace(" ", "")):
        if not raw or "T" in raw:
            continue
        i = j = 0
        coeff = 1
        for factor in raw.split("*"):
            m = re.fullmatch(r"([tq])(?:\^\(?(-?\d+)\)?)?", factor)
            if m:
                e = int(m.group(2)) if m.group(2) else 1
                if m.group(1) == "t":
                    i = e
                else:
                    j = e
            else:
                coeff = int(factor)
        if mirrored:
            i, j = -i, -j
        ranks[(i, j)] = ranks.get((i, j), 0) + coeff
    return sorted([i, j, r] for (i, j), r in ranks.items() if r)


def parse_list(text):
    return json.loads(text.replace(";", ","))


def grid_from_knotinfo(pairs, mirrored):
    cols = {}
    for c, r in pairs:
        cols.setdefault(c, []).append(r)
    n = len(cols)
    if sorted(cols) != list(range(1, n + 1)) or any(len(v) != 2 for v in cols.values()):
        raise ValueError("malformed grid notation")
    rows = {}
    for c, rs in cols.items():
        for r in rs:
            rows.setdefault(r, []).append(c)
    x = [0] * n
    o = [0] * n
    # X and O alternate along the knot.
    col, xrow = 1, cols[1][0]
    for _ in range(n):
        x[col - 1] = xrow
        orow = cols[col][1] if cols[col][0] == xrow else cols[col][0]
        o[col - 1] = orow
        nxt = rows[orow][1] if rows[orow][0] == col else rows[orow][0]
        col = nxt
        xrow = orow
    if 0 in x or 0 in o:
        raise ValueError("grid is not a knot")
    if not mirrored:
        x.reverse()
        o.reverse()
    return x, o


def pd_text(crossings):
    return "PD[" + ",".join("X[" + ",".join(str(v) for v in c) + "]" for c in crossings) + "]"


def mirror_pd(crossings):
    """Mirror assuming labels run consecutively along the orientation."""
    m = 2 * len(crossings)
    out = []
    for a, b, c, d in crossings:
        if (b - d) % m == 1:
            out.append([d, a, b, c])
        elif (d - b) % m == 1:
            out.append([b, c, d, a])
        else:
            raise ValueError("cannot orient crossing " + str([a, b, c, d]))
    return out


def braid_text(letters, index, mirrored):
    if letters and isinstance(letters[0], list):
        # several words listed; prefer one on the minimal number of strands
        letters = min(letters, key=lambda w: (max(abs(l) for l in w) + 1, len(w)))
    if mirrored:
        letters = [-l for l in letters]
    m = max([index] + [abs(l) + 1 for l in letters])
    return f"m={m}: " + " ".join(str(l) for l in letters)


def recorded_block(ki_name):
    out = {}
    for key, (value, cite) in RECORDED.get(ki_name, {}).items():
        entry = dict(value) if isinstance(value, dict) else {"value": value}
        entry["citation"] = cite
        out[key] = entry
    return out


def tb_pair(text):
    vals = re.findall(r"\[(-?\d+)\]", text)
    return [int(v) for v in vals] if len(vals) == 2 else None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("csv", type=Path)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "knots.jsonl")
    ap.add_argument(
        "--reference",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "tests" / "data" / "knotinfo_reference.jsonl",
    )
    args = ap.parse_args()

    csv.field_size_limit(10**9)
    with args.csv.open(newline="") as fh:
        reader = csv.reader(fh, delimiter="|")
        header = next(reader)
        col = {name: i for i, name in enumerate(header)}
        table = {row[0]: row for row in reader}

    records = [
        {
            "name": "0_1",
            "chirality": "amphichiral",
            "crossings": 0,
            "alternating": True,
            "grid": {"x": [2, 1], "o": [1, 2]},
            "pd": "PD[O[1]]",
            "braid": "m=1:",
            "recorded": {},
        }
    ]
    references = [
        {
            "name": "0_1",
            "kauffman": "1 a^0 z^0",
            "homfly": "1 a^0 z^0",
            "khovanov": [[0, -1, 1], [0, 1, 1]],
            "arc_index": 2,
            "tb": [-1, -1],
            "braid_index": 1,
        }
    ]
    for ki in ALTERNATING_UP_TO_8 + OTHERS:
        row = table[ki]
        get = lambda k: row[col[k]]
        mirrored = ki in MIRRORED
        x, o = grid_from_knotinfo(parse_list(get("grid_notation")), mirrored)
        if ki in GRID_OVERRIDE:
            ox, oo = GRID_OVERRIDE[ki]
            cells = lambda xs, os: {(i, r) for i, r in enumerate(xs)} | {(i, r) for i, r in enumerate(os)}
            if cells(ox, oo) != cells(x, o):
                raise SystemExit(f"{ki}: grid override does not match the tabulated grid")
            x, o = list(ox), list(oo)
        if len(x) != int(get("arc_index")):
            raise SystemExit(f"{ki}: grid size {len(x)} differs from arc index")
        pd = parse_list(get("pd_notation"))
        if mirrored:
            pd = mirror_pd(pd)
        name = short_name(ki)
        records.append(
            {
                "name": name,
                "chirality": "KnotInfo mirror" if mirrored else "KnotInfo",
                "crossings": int(get("crossing_number")),
                "alternating": get("alternating") == "Y",
                "grid": {"x": x, "o": o},
                "pd": pd_text(pd),
                "braid": braid_text(parse_list(get("braid_notation")), int(get("braid_index")), mirrored),
                "recorded": recorded_block(ki),
            }
        )
        tb = tb_pair(get("thurston_bennequin_number"))
        if tb and mirrored:
            tb = tb[::-1]
        references.append(
            {
                "name": name,
                "kauffman": canonical(kauffman_terms(get("kauffman_polynomial"), mirrored)),
                "homfly": canonical(homfly_terms(get("homfly_polynomial"), mirrored)),
                "khovanov": khovanov_ranks(get("khovanov_unreduced_integral_polynomial"), mirrored),
                "arc_index": int(get("arc_index")),
                "tb": tb,
                "braid_index": int(get("braid_index")),
            }
        )
        print(f"{name:8s} tb={tb} arc={get('arc_index')} b={get('braid_index')}", file=sys.stderr)

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w") as fh:
        for r in records:
            fh.write(json.dumps(r, separators=(",", ":")) + "\n")
    args.reference.parent.mkdir(parents=True, exist_ok=True)
    with args.reference.open("w") as fh:
        for r in references:
            fh.write(json.dumps(r, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
