"""fqcalc library package."""
