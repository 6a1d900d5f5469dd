#!/usr/bin/env python3
"""Entry point for running penrank as a module with `python -m penrank`."""

from penrank.main import main

if __name__ == "__main__":
    main()
