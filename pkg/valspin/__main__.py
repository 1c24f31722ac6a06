"""Allow ``python -m valspin``."""

from valspin.cli import main

main()
