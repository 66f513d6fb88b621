"""Loader for frozen expected-value tables shipped with the package.

Each table is a JSON document keyed by a case identifier such as
``gl_m2n1_i1j3_p3``. The documents hold generator polynomials and the
tensor expansions their reduced coproducts must equal, entry by entry,
with exact field coefficients. Set the environment variable
``SUPERDS_GOLDEN_DIR`` to read the tables from a directory instead of
the installed package data.
"""

import json
import os
from importlib import resources


def _env_dir():
    return os.environ.get("SUPERDS_GOLDEN_DIR")


def load_case(case_id):
    """The frozen table for a case id, or None when not shipped."""
    name = f"{case_id}.json"
    env = _env_dir()
    if env:
        path = os.path.join(env, name)
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    ref = resources.files("superds").joinpath("data", name)
    if not ref.is_file():
        return None
    with ref.open("r", encoding="utf-8") as fh:
        return json.load(fh)


def available_cases():
    """Sorted case ids with shipped tables."""
    env = _env_dir()
    out = []
    if env:
        for fn in os.listdir(env):
            if fn.endswith(".json"):
                out.append(fn[:-5])
        return sorted(out)
    base = resources.files("superds").joinpath("data")
    if not base.is_dir():
        return []
    for entry in base.iterdir():
        if entry.name.endswith(".json"):
            out.append(entry.name[:-5])
    return sorted(out)
