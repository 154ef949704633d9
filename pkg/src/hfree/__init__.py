"""Exact reductions and solvers for H-free edge deletion and completion.

Desk-scale toolkit: propositional formulas reduce to edge modification
instances whose free elements encode truth values, gap lifts amplify the
optimum separation, and a branch-and-prune solver certifies both directions
by exhaustion. Everything is deterministic and dependency-free.
"""

__version__ = "0.1.0"
