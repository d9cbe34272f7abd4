"""Permite ejecutar la CLI con python -m cli"""
import sys

from cli.handler import main

sys.exit(main())
