# A batch scan, as the `legmat scan` command runs it.
from legmat.harness import ScanConfig, emit_report, scan

report = scan(ScanConfig(q_max=61, jobs=2))
for tag, counts in report.summary.items():
    print(f"{tag:18s} {counts}")

print("\nunexpected failures:")
for r in report.unexpected_failures:
    print(" ", r)

print("\nfirst rows of the CSV report:")
print("".join(emit_report(report.records).splitlines(True)[:6]))
