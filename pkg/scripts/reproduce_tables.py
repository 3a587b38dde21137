#!/usr/bin/env python3
"""Script to reproduce the prohibited-pattern table and a bounded scan under data/."""

import json
import sys
from pathlib import Path

from dotenv import load_dotenv

# Add parent directory to path
sys.path.append(str(Path(__file__).parent.parent))

from lag2.core.errors import Lag2Error
from lag2.core.notation import format_cf
from lag2.patterns.certificates import prohibited_patterns_table
from lag2.patterns.scan import audit_scan, scan, write_csv

DATA_DIR = Path(__file__).parent.parent / "data"


def main():
    """Write data/prohibited_patterns.json and data/scan_p8_q3.csv."""
    load_dotenv()
    DATA_DIR.mkdir(exist_ok=True)

    try:
        print("Certifying prohibited patterns...")
        table = [
            {
                "pattern": cert.pattern.label,
                "kappa": cert.kappa_used.value,
                "alpha_star_side": format_cf(cert.extremal_left),
                "alpha_side": format_cf(cert.extremal_right),
                "bound": cert.bound.to_text(),
                "decimal": cert.decimal(6),
                "printed": cert.printed_value,
                "matches_printed": cert.matches_printed(),
            }
            for cert in prohibited_patterns_table()
        ]
        with open(DATA_DIR / "prohibited_patterns.json", "w", encoding="utf-8") as f:
            json.dump(table, f, indent=2, ensure_ascii=False)

        print("Scanning periods up to length 8 over quotients 1..3...")
        rows = scan(8, 3)
        with open(DATA_DIR / "scan_p8_q3.csv", "w", encoding="utf-8", newline="") as f:
            write_csv(rows, f)
        report = audit_scan(rows)

        print(f"\n✅ Wrote {len(table)} table rows and {len(rows)} scan rows")
        print(f"Discrete part audit: {report.summary()}")
        print("Files created:")
        print("  - data/prohibited_patterns.json")
        print("  - data/scan_p8_q3.csv")
        if not report.passed:
            sys.exit(3)

    except Lag2Error as e:
        print(f"❌ Error: {e}")
        sys.exit(e.exit_code)


if __name__ == "__main__":
    main()
