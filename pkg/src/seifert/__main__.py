"""Entry point for python -m seifert."""

from .cli import main

if __name__ == "__main__":
    main()
