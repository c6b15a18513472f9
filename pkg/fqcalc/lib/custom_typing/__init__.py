"""fqcalc custom type hints package."""
