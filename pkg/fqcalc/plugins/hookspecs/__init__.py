"""fqcalc plugin hookspecs."""
