"""Spec parsing, reports and the batch workflows behind main.py"""
from .report import Report
from .spec_parser import RepSpec, SpecParseError, load_spec, parse_spec

__all__ = ['Report', 'RepSpec', 'SpecParseError', 'load_spec', 'parse_spec']
