#!/usr/bin/env python
# coding: utf-8
from stressshield.cli.main import main

if __name__ == "__main__":
    raise SystemExit(main())
