"""
orekit - Exact arithmetic in Ore extensions K[x; sigma, delta][t] over function
fields, Hasse-Schmidt jet homomorphisms and the slice decomposition, with a
certificate-producing check of the two-variable non-cancellation instance in
characteristic p.
"""

__version__ = "0.1.0"

from .certificate import Certificate, cited, combine, failed, passed
from .config import Settings, current_settings, load_settings, use_settings
from .counterexample import build_instance, run_all
from .cli import parse_script, run_script
from .report import VerificationReport, render_text, report_digest, to_json

__all__ = [
    'Certificate',
    'cited',
    'combine',
    'failed',
    'passed',
    'Settings',
    'current_settings',
    'load_settings',
    'use_settings',
    'build_instance',
    'run_all',
    'parse_script',
    'run_script',
    'VerificationReport',
    'render_text',
    'report_digest',
    'to_json',
]
