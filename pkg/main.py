"""Semigraph - Cloud Functions entry points.

Cloud Functions requires main.py. This re-exports entry points from each module.
"""

from main_analyze import analyze_http

from main_audit import audit_http
