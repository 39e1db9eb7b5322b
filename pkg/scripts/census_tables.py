"""Print the cycle-type census of the auxiliary group, one table per rho.

Usage:
    python scripts/census_tables.py [--max-rho 4] [--heavy]

With --heavy the rho = 5 table (9,999,360 elements) is computed through the
coset machinery; expect a few minutes.
"""

import argparse

from pencilgraphs import _golden, hrho


def print_table(rho: int, census) -> bool:
    rows = sorted(
        ((hrho.super_type_str(st), d, c) for st, (d, c) in census.items()),
        key=lambda t: (t[1], t[0]),
    )
    total = sum(c for _, _, c in rows)
    print(f"\nrho = {rho}   (order {total})")
    print(f"{'super_type':<22}{'d':>3}{'count':>10}")
    ok = True
    for st, d, c in rows:
        ref = _golden.TABLE1.get(rho, {}).get(st)
        mark = "" if ref == (d, c) else "   <- differs from reference"
        if mark:
            ok = False
        print(f"{st:<22}{d:>3}{c:>10}{mark}")
    return ok


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rho", type=int, default=4)
    ap.add_argument("--heavy", action="store_true")
    args = ap.parse_args()

    ok = True
    for rho in range(2, min(args.max_rho, 4) + 1):
        ok &= print_table(rho, hrho.table_census(hrho.build_group(rho)))
    if args.heavy and args.max_rho >= 5:
        from pencilgraphs.hrho_heavy import census_heavy

        ok &= print_table(5, census_heavy(5))
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
