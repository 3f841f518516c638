"""Re-run the exhaustive search on every committed lower-bound construction."""
import sys

from geocolor.lab import certify_constructions


def main():
    failed = 0
    for cert in certify_constructions():
        g = cert.gadget
        status = "PASS" if cert.passed else "FAIL"
        failed += not cert.passed
        print(f"{status}  {g.name:30s} k={g.k}  chi={cert.found} (expected {g.expected})  "
              f"{cert.seconds * 1000:6.1f} ms")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
