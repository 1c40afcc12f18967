"""Exact series algebra, the identity catalog, and the full conformance run.

Run as: python3 demos/05_series_and_conformance.py
"""

from invpaths import TruncatedSeries, run_default_suite, verify_all_identities
from invpaths.series import a_series, catalan_series, d0_series, d_series, sqrt1m4x

print("The cubic fixed point A = 1 + (x - x^2) A^3 reproduces the census:")
a = a_series(10)
print(" ", [int(a.coeff(n)) for n in range(11)])

print("\nD (all UVD paths) and D0 (single-return UVD paths):")
d, d0 = d_series(10), d0_series(10)
print("  D :", [int(d.coeff(n)) for n in range(11)])
print("  D0:", [int(d0.coeff(n)) for n in range(11)])

print("\nCatalan sanity: C/(1 - xC^2) equals (1-4x)^(-1/2):")
c = catalan_series(8)
x = TruncatedSeries.x(8)
ratio = c * (1 - x * c**2).inverse()
print("  C/(1-xC^2):", [int(ratio.coeff(n)) for n in range(9)])
print("  1/sqrt    :", [int(sqrt1m4x(8, inverse=True).coeff(n)) for n in range(9)])

print("\nIdentity catalog at x-order 20, u-order 5:")
for report in verify_all_identities(order=20, u_order=5):
    print(f"  {report.identity.value:16} holds={report.holds}")

print("\nFull conformance suite (every family at its default guard):")
report = run_default_suite()
for r in report.results:
    print(f"  [{r.status.upper():4}] {r.label():28} cells={r.cells}")
    for note in r.notes:
        print(f"         {note}")
print(f"\nall passed: {report.passed}")
