# -*- coding: utf-8 -*-

"""
CDO-Fb Navier-Stokes
====================

Lowest-order face-based discretization of the unsteady incompressible
Navier-Stokes equations on polytopal meshes, with monolithic and artificial
compressibility time stepping.

Subpackages: `mesh`, `spaces`, `operators`, `linalg`, `timestep`, `bench`.

"""

__version__ = "0.0.1"
