"""Smoke tests for the Python bindings.

Run either against the installed package or a bare build tree (with the
extension directory on PYTHONPATH).
"""
import json
import sys

try:
    import dppw
except ImportError:
    import _dppw as dppw

failures = 0


def check(name, cond):
    global failures
    print(f"{'ok' if cond else 'FAIL'}: {name}")
    if not cond:
        failures += 1


check("version", dppw.__version__ == "0.1.0")
check("default sign recorded", dppw.default_lybe_sign in ("minus", "plus"))

names = dppw.catalog_list()
check("catalog entries", names == ["A2", "DOUBLE_A2", "P3", "B2", "PB6", "LVF"])

a2 = dppw.catalog_export("A2")
rep = json.loads(dppw.check("algebra", a2))
check("A2 identities", rep["all_pass"] and len(rep["identities"]) == 8)
check("digest format", rep["input_digest"].startswith("fnv1a:"))

double = json.loads(dppw.build_double(a2))
check("double dimension", len(double["basis"]) == 4)
flags = json.loads(dppw.ybe_classify(dppw.build_double(a2)))
check("double factorizable", flags["solves_dpybe"] and flags["factorizable"])
check("sign in classification", flags["lybe_sign"] == dppw.default_lybe_sign)

p3 = dppw.catalog_export("P3")
b2 = dppw.catalog_export("B2")
pb6 = json.loads(dppw.build_tensor(p3, b2))
check("tensor dimension", len(pb6["basis"]) == 6)
check("lifted rmatrix present", "rmatrix" in pb6)
shipped = json.loads(dppw.catalog_export("PB6"))
check("tensor matches catalog", pb6["rmatrix"] == shipped["rmatrix"])

for name in names:
    crep = json.loads(dppw.catalog_checks(name))
    check(f"catalog checks {name}", crep["all_pass"])

graded = json.loads(dppw.graded_check(box=1, window=4, mode="pairing"))
ids = graded["identities"]
check("graded identities", len(ids) == 18 and
      all(r["status"] == "pass" for r in ids))

check("show text", "(e3⊗x1)* -> e2⊗x2" in dppw.catalog_show("PB6"))
check("transcript", '"shipped_default"' in dppw.lybe_sign_transcript())

try:
    dppw.check("algebra", "{broken")
    check("parse error raised", False)
except ValueError:
    check("parse error raised", True)

print("python smoke:", "all checks pass" if failures == 0 else "FAILURES")
sys.exit(0 if failures == 0 else 1)
