"""
Resonant-triad laboratory.

Subpackages:
  lattice      - dispersion ratios, triad search, theta3 quartic, triad algebra
  dynamics     - right-hand sides, system registry, adaptive integrator, equilibria
  invariants   - conserved and monitored functionals
  closed_form  - cubic data, periods, burst bounds, reduced Hamiltonian
  cli          - command-line front end and artifact writers
"""
