"""Loads reference data shipped with survnet."""

import json
import pathlib


METHODS_PATH = pathlib.Path(__file__).parent / "datafiles" / "methods.json"
EXAMPLE_MATRIX_PATH = (
    pathlib.Path(__file__).parent / "datafiles" / "example_cost_matrix.csv"
)

with open(str(METHODS_PATH), "r") as inf:
    METHOD_DATA = json.loads(inf.read())
