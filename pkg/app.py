#!/usr/bin/env python3
"""Main application entry point."""

from dotenv import load_dotenv

from lag2.cli.main import main

# Load environment variables (LAG2_PRECISION_LIMIT, LAG2_DIGITS, ...)
load_dotenv()


if __name__ == "__main__":
    main()
