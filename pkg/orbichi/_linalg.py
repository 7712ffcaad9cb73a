#!/usr/bin/env python

""" _linalg.py: exact integer linear algebra (private).

Copyright (C) 2026  orbichi developers

This program is free software: you can redistribute it and/or modify it under
the terms of the GNU General Public License as published by the Free Software
Foundation, either version 3 of the License, or (at your option) any later
version.

Redistribution and use in source and binary forms, with or without
modifications, are permitted provided that the following conditions are met:
 o Redistributions of source code must retain the above copyright notice, this
   list of conditions and the following disclaimer.
 o Redistributions in binary form must reproduce the above copyright notice,
   this list of conditions and the following disclaimer in the documentation
   and/or other materials provided with the distribution.

Supports the rational rank computations of simplicial.py. Matrices are numpy
object arrays of Python ints so that no entry ever leaves exact arithmetic.

"""

__name__ = '_linalg'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import numpy as np

def int_matrix(rows,cols):
    """ :returns: a rows x cols zero matrix of Python ints """
    m = np.empty((rows,cols),dtype=object)
    m.fill(0)
    return m

def bareiss_rank(m):
    """
     rank over the rationals by fraction-free (Bareiss) elimination
     :param m: 2-d array-like of integers (not modified)
     :returns: the rank
    """
    a = np.array(m,dtype=object)
    if a.ndim != 2 or a.size == 0: return 0
    nr,nc = a.shape
    r = 0     # current pivot row
    prev = 1  # previous pivot
    for c in range(nc):
        if r == nr: break
        nz = [i for i in range(r,nr) if a[i,c] != 0]
        if not nz: continue
        p = nz[0]
        if p != r: a[[r,p]] = a[[p,r]]
        piv = a[r,c]
        for i in range(r+1,nr):
            # every entry below stays an exact multiple of prev
            a[i,c:] = (a[i,c:]*piv - a[r,c:]*a[i,c]) // prev
        prev = piv
        r += 1
    return r
