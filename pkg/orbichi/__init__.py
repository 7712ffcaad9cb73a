#!/usr/bin/env python
""" orbichi: exact orbifold invariants from combinatorial presentations

Copyright (C) 2026  orbichi developers

This program is free software: you can redistribute it and/or modify it under
the terms of the GNU General Public License as published by the Free Software
Foundation, either version 3 of the License, or (at your option) any later
version.

Redistribution and use in source and binary forms, with or without modifications,
are permitted provided that the following conditions are met:
 o Redistributions of source code must retain the above copyright notice, this
   list of conditions and the following disclaimer.
 o Redistributions in binary form must reproduce the above copyright notice,
   this list of conditions and the following disclaimer in the documentation
   and/or other materials provided with the distribution.

Computes orbifold invariants from labeled simplicial complexes (a finite
isotropy group per simplex plus face monomorphisms) and from finite group
actions on simplicial complexes.

Currently Supported
 singular strata of linear charts
 twisted sectors, degree shifting numbers, orbifold Betti tables
 orbifold, inner orbifold, stringy and global-quotient Euler characteristics
 planar vector field indices

Not Supported
 integral homology, smooth structures, orbifold cup products

Requires:
 Python 3.8+
 numpy
 sympy

WARNING: Be careful if importing * (all)

"""
__name__ = 'orbichi'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

# for our setup.py
version = __version__

long_desc = """
Orbichi computes orbifold invariants with exact rational arithmetic. Orbifolds
are given combinatorially, as simplicial complexes whose simplices carry finite
isotropy groups, or as finite group actions on simplicial complexes.

It reports orbifold Euler characteristics, twisted sectors with their degree
shifts, orbifold Betti tables, and the counting identities that tie these
numbers to the Euler characteristic of the underlying space.
"""
