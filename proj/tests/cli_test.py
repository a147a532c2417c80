#!/usr/bin/env python3
"""End-to-end checks of the fatoukit command line.

usage: cli_test.py FATOUKIT_BINARY REPO_ROOT [--regen]
"""
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN = Path(sys.argv[1]).resolve()
ROOT = Path(sys.argv[2]).resolve()
REGEN = "--regen" in sys.argv[3:]
FIXTURES = ROOT / "fixtures"
SCHEMA = json.loads((ROOT / "schema" / "report.schema.json").read_text())

# name -> (arguments, files written)
GOLDEN = {
    "nz": (["classify", "--family", "family n: n*z | family n: n*(z-1)", "--grid", "32x32"], ["fj.pgm", "i.pgm", "u.pgm", "json"]),
    "exp": (["report", "--family", "family n: exp(n*z)", "--grid", "24x24", "--window", "-1,1,-1,1"], ["fj.pgm", "i.pgm", "u.pgm", "json"]),
    "disk": (["classify", "--family", "family n: z^n", "--grid", "20x20", "--disk", "0,0,1.5"], ["fj.pgm", "json"]),
    "pair": (["algebra", "--family", "family n: n*z", "--family2", "family n: n*(z-1/2)", "--grid", "24x24",
              "--window", "-1,1,-1,1"], ["json"]),
}

failures = []


def check(ok, what):
    print(("ok   " if ok else "FAIL ") + what)
    if not ok:
        failures.append(what)


def run(args, cwd, env=None):
    e = {k: v for k, v in os.environ.items() if not k.startswith("FATOUKIT_")}
    e.update(env or {})
    return subprocess.run([str(BIN), *args], cwd=cwd, env=e, capture_output=True, text=True)


def main():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)

        for name, (args, files) in GOLDEN.items():
            r = run([*args, "--out", name], tmp)
            check(r.returncode == 0, f"{name}: exit 0 (got {r.returncode}: {r.stderr.strip()})")
            doc = json.loads((tmp / f"{name}.json").read_text())
            try:
                jsonschema.validate(doc, SCHEMA)
                check(True, f"{name}: report validates against the schema")
            except jsonschema.ValidationError as err:
                check(False, f"{name}: schema violation {err.message}")
            for ext in files:
                got = (tmp / f"{name}.{ext}").read_bytes()
                golden = FIXTURES / f"{name}.{ext}"
                if REGEN:
                    golden.write_bytes(got)
                check(golden.exists() and golden.read_bytes() == got, f"{name}.{ext} matches its golden fixture")

        r = run(["classify", "--family", "family n: n*z", "--grid", "1x1", "--out", "one"], tmp)
        check(r.returncode == 0, "1x1 grid exits 0")
        check(json.loads((tmp / "one.json").read_text())["counts"]["total"] == 1, "1x1 grid has one pixel")

        r = run(["classify", "--family", "family n: n*+", "--out", "bad"], tmp)
        check(r.returncode == 2, f"parse error exits 2 (got {r.returncode})")
        r = run(["classify", "--family", "family n: n*z", "--grid", "0x4"], tmp)
        check(r.returncode == 2, f"bad grid exits 2 (got {r.returncode})")
        r = run(["classify", "--family", "family n: n*z", "--window", "1,0,0,1"], tmp)
        check(r.returncode == 2, f"empty window exits 2 (got {r.returncode})")
        r = run(["classify", "--bogus"], tmp)
        check(r.returncode == 2, f"unknown flag exits 2 (got {r.returncode})")
        r = run([], tmp)
        check(r.returncode == 2, f"missing subcommand exits 2 (got {r.returncode})")
        r = run(["algebra", "--family", "family n: n*z"], tmp)
        check(r.returncode == 2, f"algebra without --family2 exits 2 (got {r.returncode})")
        r = run(["classify", "--family", "family n: n*z", "--grid", "4x4", "--out", str(tmp / "missing" / "x")], tmp)
        check(r.returncode == 3, f"unwritable output exits 3 (got {r.returncode})")

        r = run(["classify", "--grid", "4x4", "--out", "env"], tmp,
                {"FATOUKIT_FAMILY": "family n: z^n", "FATOUKIT_NMAX": "192"})
        doc = json.loads((tmp / "env.json").read_text())
        check(r.returncode == 0 and doc["family"]["canonical"] == "family n: z^n", "FATOUKIT_FAMILY applies")
        check(doc["params"]["escape"]["n_max"] == 192, "FATOUKIT_NMAX applies")
        r = run(["classify", "--grid", "4x4", "--nmax", "128", "--family", "family n: n*z", "--out", "flag"], tmp,
                {"FATOUKIT_FAMILY": "family n: z^n", "FATOUKIT_NMAX": "192", "FATOUKIT_GRID": "8x8"})
        doc = json.loads((tmp / "flag.json").read_text())
        check(doc["family"]["canonical"] == "family n: n*z", "--family wins over FATOUKIT_FAMILY")
        check(doc["params"]["escape"]["n_max"] == 128, "--nmax wins over FATOUKIT_NMAX")
        check(doc["window"]["width"] == 4, "--grid wins over FATOUKIT_GRID")
        r = run(["classify", "--family", "family n: n*z", "--out", "envgrid"], tmp, {"FATOUKIT_GRID": "6x5"})
        doc = json.loads((tmp / "envgrid.json").read_text())
        check([doc["window"]["width"], doc["window"]["height"]] == [6, 5], "FATOUKIT_GRID applies")

        r = run(["verify", "--list"], tmp)
        names = r.stdout.split()
        check(r.returncode == 0 and len(names) >= 30 and "escape-bounded-limit" in names, "verify --list prints the cases")
        r = run(["verify", "--case", "dsl-union", "--case", "topology-two-holes"], tmp)
        check(r.returncode == 0, f"selected verify cases pass (got {r.returncode})")
        r = run(["verify", "--case", "no-such-case"], tmp)
        check(r.returncode == 2, f"unknown verify case exits 2 (got {r.returncode})")
        r = run(["verify", "--case", "escape-bounded-limit"], tmp, {"FATOUKIT_ESCAPE_RADIUS": "10"})
        check(r.returncode == 1, f"escape radius 10 makes verify fail (got {r.returncode})")
        r = run(["verify", "--case", "escape-bounded-limit", "--escape-radius", "1e6"], tmp,
                {"FATOUKIT_ESCAPE_RADIUS": "10"})
        check(r.returncode == 0, f"--escape-radius wins over the environment (got {r.returncode})")

    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
