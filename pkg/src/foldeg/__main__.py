"""Allow ``python -m foldeg ...`` as an alias of the foldeg script."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
