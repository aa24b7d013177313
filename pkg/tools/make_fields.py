"""Write the table of primitive polynomials used by saxlgraph.fields.

For every prime power q = p^f <= 1024 with f >= 1, store the low coefficients of
the first primitive polynomial found by ``find_primitive_polynomial``.
"""

from __future__ import annotations

import json
from pathlib import Path

from saxlgraph.fields import MAX_ORDER, find_primitive_polynomial, prime_power

OUT = Path(__file__).resolve().parents[1] / "src" / "saxlgraph" / "data" / "primitive_polynomials.json"


def main() -> None:
    table = {}
    for q in range(2, MAX_ORDER + 1):
        pf = prime_power(q)
        if pf is None:
            continue
        p, f = pf
        table[f"{p}^{f}"] = find_primitive_polynomial(p, f)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(table, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(table)} polynomials to {OUT}")


if __name__ == "__main__":
    main()
