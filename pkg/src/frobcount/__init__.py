"""Exact counts of subgroups of prime-power order in small permutation groups."""
