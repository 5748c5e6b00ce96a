"""Regenerate the bundled PD fixtures from the LinkInfo / KnotInfo tables.

Needs the ``database_knotinfo`` package (``pip install database_knotinfo``).
Run from the repository root:

    python tools/fetch_fixtures.py
"""

import csv
import os
import re

import database_knotinfo

LINKS = [
    "L8n6", "L8n8", "L9n18", "L9n19", "L9n27", "L10n32", "L10n36", "L10n56",
    "L10n57", "L10n59", "L10n91", "L10n93", "L10n94", "L10n104", "L10n107",
    "L10n111",
]
# small reference diagrams for the oracle tests, and two links whose
# five-color colorings are not simple
EXTRA_LINKS = {"hopf": "L2a1", "whitehead": "L5a1", "L11n379": "L11n379", "L11n381": "L11n381"}
KNOTS = {"trefoil": "3_1", "figure_eight": "4_1", "knot_5_1": "5_1", "knot_5_2": "5_2",
         "knot_6_1": "6_1"}

OUT = os.path.join(os.path.dirname(__file__), os.pardir, "src", "zcolor", "fixtures")


def _rows(name):
    base = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data")
    csv.field_size_limit(10**8)
    with open(os.path.join(base, name)) as fh:
        reader = csv.reader(fh, delimiter="|")
        header = next(reader)
        for row in reader:
            yield dict(zip(header, row))


def _as_x(pd_text):
    quads = re.findall(r"[\[{]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\]}]", pd_text)
    return " ".join("X[%s]" % ",".join(q) for q in quads)


def main():
    os.makedirs(OUT, exist_ok=True)
    want = {n: n for n in LINKS}
    want.update({v: k for k, v in EXTRA_LINKS.items()})
    for row in _rows("linkinfo_data_complete.csv"):
        base = row["name"].split("{")[0]
        if base in want and re.fullmatch(r"\{0(,0)*\}", row["name"][len(base):]):
            fname = want.pop(base)
            with open(os.path.join(OUT, fname + ".pd"), "w") as fh:
                fh.write("# %s from LinkInfo (determinant %s)\n" % (row["name"], row["determinant"]))
                fh.write(_as_x(row["pd_notation_vector"]) + "\n")
    knots = {v: k for k, v in KNOTS.items()}
    for row in _rows("knotinfo_data_complete.csv"):
        if row["name"] in knots:
            fname = knots.pop(row["name"])
            with open(os.path.join(OUT, fname + ".pd"), "w") as fh:
                fh.write("# %s from KnotInfo (determinant %s)\n" % (row["name"], row["determinant"]))
                fh.write(_as_x(row["pd_notation"]) + "\n")
    missing = list(want) + list(knots)
    if missing:
        raise SystemExit("not found: %s" % missing)


if __name__ == "__main__":
    main()
