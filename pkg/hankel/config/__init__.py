"""Configuration module"""
from hankel.config.settings import Config, RunProfile, config, get_profile

__all__ = ["Config", "RunProfile", "config", "get_profile"]
