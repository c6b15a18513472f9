"""fqcalc dataclasses.

These hold the results of computations and identity checks.
"""
