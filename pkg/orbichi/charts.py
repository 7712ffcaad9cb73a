#!/usr/bin/env python

""" charts.py: linear orbifold charts, planar vector fields and their indices

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

A linear chart is a finite group acting orthogonally on R^n, the matrix of
element i being matrices[i]. Everything here is floating point, checked
against TOLERANCE (absolute) or RANK_TOLERANCE (singular values, relative to
the largest one but never below an absolute floor of the same size).

"""

__name__ = 'charts'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import logging
import math
from fractions import Fraction
import numpy as np
import orbichi.groups as groups

log = logging.getLogger('orbichi.charts')

class error(ValueError): pass
class VanishesOnCircle(error): pass
class NotEquivariant(error): pass
class NotFiniteOrder(error): pass
class NotComplexLinear(error): pass
class WindingUnresolved(error): pass

TOLERANCE = 1e-9         # absolute tolerance on matrix & field checks
RANK_TOLERANCE = 1e-7    # singular values below this (relative) are zero
WINDING_START = 256      # initial samples on the circle
WINDING_CAP = 2**20      # max samples on the circle
EQUIVARIANCE_GRID = 9    # grid points per axis for equivariance checks
MAX_ORDER = 360          # largest rotation group built as a table

#### LINEAR CHARTS

class LinearChart(object):
    """
     a finite group acting linearly on R^n
      n: ambient dimension
      group: FiniteGroup
      matrices: tuple of n x n float arrays, one per group element
    """
    def __init__(self,n,group,matrices,name=''):
        self._n = n
        self._G = group
        self._ms = tuple(np.asarray(m,dtype=float).reshape(n,n) for m in matrices)
        self._name = name

    def __repr__(self):
        return "LinearChart({0},n={1},group={2})".format(self._name,self._n,self._G.name)

    @property
    def n(self): return self._n

    @property
    def group(self): return self._G

    @property
    def matrices(self): return self._ms

    @property
    def name(self): return self._name

    def matrix(self,g): return self._ms[g]

    def conjugate(self,Q):
        """ :returns: the chart g -> Q.matrix(g).Q^T """
        Q = np.asarray(Q,dtype=float)
        return LinearChart(self._n,self._G,[Q @ m @ Q.T for m in self._ms],self._name)

def chart_violations(c,tol=TOLERANCE):
    """
     :param c: LinearChart
     :param tol: absolute tolerance
     :returns: list of tuples t = (location,message), empty for a valid chart
    """
    err = []
    G,n = c.group,c.n
    if len(c.matrices) != G.order:
        return [('matrices','need one matrix per group element')]
    eye = np.eye(n)
    if not np.allclose(c.matrix(0),eye,rtol=0,atol=tol):
        err.append(('matrix.0','identity element must act trivially'))
    for g,m in enumerate(c.matrices):
        if not np.allclose(m.T @ m,eye,rtol=0,atol=tol):
            err.append(('matrix.{0}'.format(g),'not orthogonal'))
        elif g and not np.allclose(m,eye,rtol=0,atol=tol) and n - fixed_dimension(m) < 2:
            err.append(('matrix.{0}'.format(g),'fixed subspace has codimension 1'))
    for g in range(G.order):
        for h in range(G.order):
            if not np.allclose(c.matrix(g) @ c.matrix(h),c.matrix(G.mul(g,h)),rtol=0,atol=tol):
                err.append(('matrix.{0}.{1}'.format(g,h),'not a representation'))
    return err

def _rank_(a,tol):
    if a.size == 0: return 0
    s = np.linalg.svd(a,compute_uv=False)
    return int(np.count_nonzero(s > tol*max(1.0,s[0])))

def fixed_dimension(m,tol=RANK_TOLERANCE):
    """ :returns: dimension of the subspace fixed by the matrix m """
    m = np.asarray(m,dtype=float)
    return m.shape[0] - _rank_(m - np.eye(m.shape[0]),tol)

def singular_dimension(c,tol=RANK_TOLERANCE):
    """ :returns: dimension of the subspace fixed by the whole group """
    eye = np.eye(c.n)
    a = np.vstack([m - eye for m in c.matrices])
    return c.n - _rank_(a,tol)

def singular_dimension_invariance(c,Q,tol=RANK_TOLERANCE):
    """ :returns: True if conjugating c by the orthogonal Q keeps its singular dimension """
    return singular_dimension(c.conjugate(Q),tol) == singular_dimension(c,tol)

class Strata(dict):
    """
     dict element -> dimension of its fixed subspace, full is the dimension
     fixed by the whole group
    """
    def __init__(self,d=None,full=None):
        dict.__init__(self,{} if d is None else d)
        self.full = full

def stratum_dimensions(c,tol=RANK_TOLERANCE):
    """ :returns: Strata of c """
    return Strata({g:fixed_dimension(m,tol) for g,m in enumerate(c.matrices)},
                  singular_dimension(c,tol))

def random_rotation(n,rng):
    """
     :param n: dimension
     :param rng: numpy Generator
     :returns: a random n x n rotation (orthogonal, determinant +1)
    """
    q,r = np.linalg.qr(rng.standard_normal((n,n)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0: q[:,0] = -q[:,0]
    return q

#### CHART BUILDERS

def _planar_(theta):
    c,s = math.cos(theta),math.sin(theta)
    return np.array([[c,-s],[s,c]])

def _rot_z_(theta):
    m = np.eye(3)
    m[:2,:2] = _planar_(theta)
    return m

def trivial_chart(n):
    """ the trivial group acting on R^n """
    return LinearChart(n,groups.trivial(),[np.eye(n)],'trivial')

def antipodal_chart(n):
    """ Z_2 acting on R^n by x -> -x """
    return LinearChart(n,groups.cyclic(2),[np.eye(n),-np.eye(n)],'antipodal')

def rotation_chart(k,n=2):
    """
     Z_k rotating R^2 (n = 2) or R^3 about the z-axis (n = 3), element i
     rotating by 2*pi*i/k
    """
    if n not in (2,3): raise error("rotation charts have dimension 2 or 3")
    if not 1 <= k <= MAX_ORDER: raise error("rotation order must be in 1..{0}".format(MAX_ORDER))
    rot = _planar_ if n == 2 else _rot_z_
    return LinearChart(n,groups.cyclic(k),[rot(2*math.pi*i/k) for i in range(k)],'rotation')

def figure8_chart():
    """
     the dihedral group of order 6 acting on R^3, r a rotation by 2*pi/3 about
     the z-axis and s a rotation by pi about the x-axis (element a+3b is r^a s^b)
    """
    r = _rot_z_(2*math.pi/3)
    s = np.diag([1.,-1.,-1.])
    ms = [np.linalg.matrix_power(r,a) @ np.linalg.matrix_power(s,b)
          for b in range(2) for a in range(3)]
    return LinearChart(3,groups.dihedral(3),ms,'figure8')

def chart_from_generators(generators,name='generated',cap=None,decimals=6):
    """
     closes orthogonal generators under multiplication
     :param generators: non-empty sequence of n x n matrices
     :param name: chart name
     :param cap: max group order (defaults to groups.CLOSURE_CAP)
     :param decimals: rounding used to recognize equal matrices
     :returns: LinearChart (element 0 the identity)
    """
    cap = groups.CLOSURE_CAP if cap is None else cap
    gens = [np.asarray(g,dtype=float) for g in generators]
    if not gens: raise error("need at least one generator")
    n = gens[0].shape[0]
    key = lambda m:tuple(np.round(m,decimals).ravel())
    elements = [np.eye(n)]
    index = {key(elements[0]):0}
    i = 0
    while i < len(elements):
        for g in gens:
            y = g @ elements[i]
            if key(y) not in index:
                if len(elements) >= cap:
                    raise groups.ClosureOverflow("closure exceeds {0} matrices".format(cap))
                index[key(y)] = len(elements)
                elements.append(y)
        i += 1
    table = [[index[key(a @ b)] for b in elements] for a in elements]
    log.debug("closed %d generators to %d matrices",len(gens),len(elements))
    return LinearChart(n,groups.group_from_table(table,name),elements,name)

#### PLANAR FIELDS

class PlanarField(object):
    """
     a vector field on R^2
      sampler: function (x,y) -> (u,v), vectorized over numpy arrays unless
       vectorized is False
      label: text
    """
    def __init__(self,sampler,label='',vectorized=True):
        self._f = sampler
        self._label = label
        self._vec = vectorized

    def __repr__(self): return "PlanarField({0})".format(self._label)

    @property
    def label(self): return self._label

    def __call__(self,x,y):
        """ :returns: tuple t = (u,v) of float arrays shaped like x """
        x,y = np.asarray(x,dtype=float),np.asarray(y,dtype=float)
        if self._vec:
            u,v = self._f(x,y)
        else:
            uv = [self._f(a,b) for a,b in zip(x.ravel(),y.ravel())]
            u = np.array([p[0] for p in uv],dtype=float).reshape(x.shape)
            v = np.array([p[1] for p in uv],dtype=float).reshape(x.shape)
        return np.broadcast_to(np.asarray(u,dtype=float),x.shape), \
               np.broadcast_to(np.asarray(v,dtype=float),x.shape)

def complex_field(fn,label=''):
    """ :returns: the PlanarField of a function of one complex variable (numpy-vectorized) """
    def sample(x,y):
        w = np.asarray(fn(x + 1j*y),dtype=complex)
        return w.real,w.imag
    return PlanarField(sample,label)

def equivariance_check(f,c,samples=EQUIVARIANCE_GRID,tol=TOLERANCE):
    """
     :param f: PlanarField
     :param c: LinearChart with n = 2
     :param samples: grid points per axis on [-1,1]^2
     :param tol: absolute tolerance (scaled by the field's magnitude when > 1)
     :returns: True if f(g.x) = g.f(x) at every grid point for every g
    """
    if c.n != 2: raise error("equivariance is checked on planar charts only")
    t = np.linspace(-1.,1.,samples)
    x,y = np.meshgrid(t,t)
    p = np.vstack([x.ravel(),y.ravel()])
    fp = np.vstack(f(p[0],p[1]))
    scale = max(1.0,float(np.abs(fp).max()))
    for m in c.matrices:
        gp = m @ p
        lhs = np.vstack(f(gp[0],gp[1]))
        if np.abs(lhs - m @ fp).max() > tol*scale: return False
    return True

def winding_index(f,radius=1.0,samples=WINDING_START,tol=TOLERANCE,cap=WINDING_CAP):
    """
     the degree of f/|f| on the circle of the given radius, samples doubling
     until every angular step is below pi/2
     :param f: PlanarField
     :param radius: circle radius > 0
     :param samples: initial number of samples
     :param tol: f must exceed 10*tol in norm on the circle
     :param cap: max samples before giving up
     :returns: the winding number
    """
    n = max(int(samples),4)
    while True:
        theta = np.linspace(0.,2*math.pi,n,endpoint=False)
        u,v = f(radius*np.cos(theta),radius*np.sin(theta))
        if np.hypot(u,v).min() <= 10*tol:
            raise VanishesOnCircle("{0} vanishes on the circle of radius {1}".format(f.label,radius))
        ang = np.arctan2(v,u)
        steps = np.diff(np.append(ang,ang[0]))
        steps = (steps + math.pi) % (2*math.pi) - math.pi
        if np.abs(steps).max() < math.pi/2:
            return int(np.rint(steps.sum()/(2*math.pi)))
        n *= 2
        if n > cap:
            raise WindingUnresolved("{0}: no resolution with {1} samples".format(f.label,cap))
        log.debug("refining winding of %s to %d samples",f.label,n)

def orbifold_index(f,c,radius=1.0,samples=WINDING_START,tol=TOLERANCE):
    """
     :param f: PlanarField equivariant under c
     :param c: planar LinearChart of a cyclic group
     :returns: winding index divided by the group order
    """
    G = c.group
    if c.n != 2 or not any(G.element_order(g) == G.order for g in G):
        raise error("orbifold index needs a planar cyclic chart")
    if not equivariance_check(f,c,tol=tol):
        raise NotEquivariant("{0} is not equivariant under {1}".format(f.label,G.name))
    return Fraction(winding_index(f,radius,samples,tol),G.order)

#### DEGREE SHIFTS

_J_ = np.array([[0.,-1.],[1.,0.]])

def _complexify_(U,tol):
    """ real 2n x 2n matrix commuting with J -> complex n x n in z_j = x_2j + i x_2j+1 """
    if U.ndim != 2 or U.shape[0] != U.shape[1] or U.shape[0] % 2:
        raise NotComplexLinear("real matrix must be 2n x 2n")
    n = U.shape[0] // 2
    J = np.kron(np.eye(n),_J_)
    if not np.allclose(U @ J,J @ U,rtol=0,atol=tol):
        raise NotComplexLinear("matrix does not commute with the complex structure")
    return U[0::2,0::2] + 1j*U[1::2,0::2]

def exponent_pairs(U,m,tol=TOLERANCE):
    """
     :param U: unitary matrix, complex n x n or real 2n x 2n
     :param m: order, U^m = I
     :param tol: absolute tolerance
     :returns: sorted list of (m_j,m), the eigenvalues being exp(2 pi i m_j/m)
    """
    U = np.asarray(U)
    Z = U.astype(complex) if np.iscomplexobj(U) else _complexify_(U.astype(float),tol)
    if m < 1: raise NotFiniteOrder("order must be >= 1")
    n = Z.shape[0]
    if not np.allclose(np.linalg.matrix_power(Z,m),np.eye(n),rtol=0,atol=tol):
        raise NotFiniteOrder("matrix does not have order dividing {0}".format(m))
    pairs = []
    for lam in np.linalg.eigvals(Z):
        mj = int(np.rint(np.angle(lam)*m/(2*math.pi))) % m
        if abs(np.exp(2j*math.pi*mj/m) - lam) >= max(tol,1e3*np.finfo(float).eps):
            raise NotFiniteOrder("eigenvalue {0} is not an {1}th root of unity".format(lam,m))
        pairs.append((mj,m))
    return sorted(pairs)
