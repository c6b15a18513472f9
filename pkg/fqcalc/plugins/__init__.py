"""fqcalc plugins package."""
