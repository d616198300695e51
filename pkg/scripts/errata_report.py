#!/usr/bin/env python3
"""Run the full witness plan and write records (JSON, CSV) and a readable errata summary."""

import argparse
import json
import pathlib

from commenergy import verify as V


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="reports")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--formula", action="append", help="restrict to these formula ids")
    args = ap.parse_args()

    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    run = V.verify_all(threads=args.threads, formulas=args.formula)
    (out / "verify.json").write_text(run.to_json())
    (out / "verify.csv").write_text(run.to_csv())
    errata = V.errata_report(run.records)
    (out / "errata.json").write_text(json.dumps(errata, indent=1) + "\n")

    lines = [f"{len(run.records)} records, {len(run.skipped)} skipped pairings", ""]
    for m in errata["mismatches"]:
        lines.append(f"{m['formula']} {m['quantity']}: {len(m['witnesses'])} witness(es)")
        for w in m["witnesses"][:4]:
            comp = w["computed"].get("exact") or f"{w['computed']['lo']}..{w['computed']['hi']}"
            lines.append(f"    {w['group']:<34} printed {str(w['printed']):<28} computed {comp}")
    lines.append("")
    for n in errata["spectrumNotes"]:
        for w in n["witnesses"]:
            lines.append(f"{n['formula']} {w['group']}: {w['note']}")
    (out / "errata.txt").write_text("\n".join(lines) + "\n")
    print("\n".join(lines))


if __name__ == "__main__":
    main()
