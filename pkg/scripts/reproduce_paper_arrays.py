"""Rebuild every printed example array and diff it against tests/data/paper_arrays.json."""
import json
import sys
from pathlib import Path

from heffter.constructions import construct
from heffter.verifier import check_axioms

DATA = Path(__file__).resolve().parent.parent / "tests" / "data" / "paper_arrays.json"


def main() -> int:
    recs = json.loads(DATA.read_text())["tight"]
    failures = 0
    for rec in recs:
        A = construct(rec["n"], rec["t"])
        same = A.signed_rows() == rec["rows"]
        ok = check_axioms(A).overall
        failures += not (same and ok)
        print(f"NH_{rec['t']}({rec['n']};{rec['n']}) over Z_{A.v:<4} "
              f"{'match' if same else 'MISMATCH'}  axioms {'ok' if ok else 'FAIL'}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
