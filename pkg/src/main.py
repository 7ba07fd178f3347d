"""Command-line entrypoint: `python src/main.py table|verify|expand ...`."""

import sys

from cli import run


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
