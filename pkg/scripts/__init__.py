"""
Operator scripts for long-running sweeps.
"""
