"""
CLI Package
"""
from src.cli.run_config import RunConfig, build_run_config
from src.cli.main import build_parser, main

__all__ = [
    'RunConfig',
    'build_run_config',
    'build_parser',
    'main'
]
