"""Logging and serialization utilities"""
from hankel.utils.logging import configure_logging
from hankel.utils.serialization import dumps, fraction_str, to_json_value

__all__ = ["configure_logging", "dumps", "fraction_str", "to_json_value"]
