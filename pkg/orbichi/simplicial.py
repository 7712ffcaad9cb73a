#!/usr/bin/env python

""" simplicial.py: finite simplicial complexes and their rational homology

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

A complex is a collection of simplices indexed by integer id where each
simplex of dimension d >= 1 lists its d+1 facets in a fixed order (position i
is the face omitting vertex i). The boundary of a simplex is
 sum_i (-1)^i * signs[i] * facet_i
where signs defaults to +1. Signs other than +1 only occur in quotient
complexes (see orbifold.global_quotient) where an orbit representative meets
a facet orbit with the opposite orientation. Because of this a complex is
really a cell complex (facets may repeat) which is all the sector complexes
of sectors.py need.

Every construction checks that the boundary of a boundary vanishes.

"""

__name__ = 'simplicial'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import logging
import itertools
from collections import namedtuple, defaultdict
from fractions import Fraction
import orbichi._linalg as linalg

log = logging.getLogger('orbichi.simplicial')

class error(ValueError): pass
class NotClosed(error): pass
class BadDimension(error): pass
class BadSigns(error): pass
class NotChain(error): pass
class DuplicateId(error): pass

# exact rational number, always reduced with positive denominator
Rational = Fraction

def ratstr(q):
    """ :returns: the rational q as the string 'p/q' (integers as 'n/1') """
    q = Fraction(q)
    return "{0}/{1}".format(q.numerator,q.denominator)

def parse_rational(s):
    """ :returns: Fraction from a 'p/q' (or integer) string """
    return Fraction(s)

Simplex = namedtuple('Simplex','id dim facets signs')

class SimplicialComplex(object):
    """
     an immutable id-indexed collection of Simplex. When built from vertex
     sets (complex_from_facets) the complex also remembers the sorted tuple of
     vertex ids spanning each simplex
    """
    def __init__(self,simplices,vertex_sets=None):
        self._s = {s.id:s for s in sorted(simplices,key=lambda s:(s.dim,s.id))}
        self._dim = max((s.dim for s in self._s.values()),default=-1)
        self._bydim = defaultdict(list)
        for s in self._s.values(): self._bydim[s.dim].append(s.id)
        self._vsets = dict(vertex_sets) if vertex_sets is not None else None
        self._vindex = None

    def __repr__(self):
        return "SimplicialComplex(dim={0},counts={1})".format(self._dim,self.counts())

    def __len__(self): return len(self._s)
    def __iter__(self): return iter(self._s.values())
    def __contains__(self,sid): return sid in self._s
    def __getitem__(self,sid): return self._s[sid]

    def __eq__(self,other):
        return isinstance(other,SimplicialComplex) and self._s == other._s
    def __ne__(self,other): return not self == other

    @property
    def dim(self): return self._dim

    @property
    def simplices(self): return self._s

    @property
    def has_vertex_sets(self): return self._vsets is not None

    def ids(self,dim=None):
        """ :returns: sorted ids (of the given dimension when dim is not None) """
        if dim is None: return sorted(self._s)
        return sorted(self._bydim.get(dim,[]))

    def counts(self):
        """ :returns: list of the number of simplices per dimension 0..dim """
        return [len(self._bydim.get(d,[])) for d in range(self._dim+1)]

    def facets(self,sid): return self._s[sid].facets

    def vertices(self,sid):
        """ :returns: tuple of vertex ids of simplex sid """
        if self._vsets is not None: return self._vsets[sid]
        s = self._s[sid]
        if s.dim == 0: return (sid,)
        return tuple(sorted(set(itertools.chain.from_iterable(self.vertices(f) for f in s.facets))))

    def find(self,vertices):
        """
         :param vertices: iterable of vertex ids
         :returns: the id of the simplex spanned by vertices or None
        """
        if self._vsets is None: raise error("complex has no vertex sets")
        if self._vindex is None:
            self._vindex = {frozenset(v):sid for sid,v in self._vsets.items()}
        return self._vindex.get(frozenset(vertices))

    def faces(self,sid):
        """ :returns: set of all faces of sid (including sid) """
        out = {sid}
        todo = [sid]
        while todo:
            for f in self._s[todo.pop()].facets:
                if f not in out:
                    out.add(f)
                    todo.append(f)
        return out

    def closure(self,ids):
        """ :returns: smallest face-closed set containing ids """
        out = set()
        for sid in ids:
            if sid not in out: out |= self.faces(sid)
        return out

    def maximal(self):
        """ :returns: ids of simplices that are not a facet of any simplex """
        covered = set(itertools.chain.from_iterable(s.facets for s in self._s.values()))
        return [sid for sid in self.ids() if sid not in covered]

    def boundary_matrix(self,d):
        """
         :param d: dimension >= 1
         :returns: integer matrix with rows the (d-1)-simplices and columns the
          d-simplices (both in id order)
        """
        rows = {sid:i for i,sid in enumerate(self.ids(d-1))}
        cols = self.ids(d)
        m = linalg.int_matrix(len(rows),len(cols))
        for j,sid in enumerate(cols):
            s = self._s[sid]
            for i,(f,sg) in enumerate(zip(s.facets,s.signs)):
                m[rows[f],j] += sg if i % 2 == 0 else -sg
        return m

    def boundary(self,sid):
        """ :returns: dict facet id -> coefficient of the boundary of sid """
        s = self._s[sid]
        out = defaultdict(int)
        for i,(f,sg) in enumerate(zip(s.facets,s.signs)):
            out[f] += sg if i % 2 == 0 else -sg
        return {f:c for f,c in out.items() if c}

def _entry_(e):
    """ normalizes a simplex description (Simplex, dict or tuple) """
    if isinstance(e,Simplex): return e
    if isinstance(e,dict):
        return e['id'],e['dim'],e.get('facets',()),e.get('signs')
    e = tuple(e)
    return e if len(e) == 4 else e + (None,)

def complex_from_simplices(entries,vertex_sets=None):
    """
     validates a complex given simplex by simplex
     :param entries: iterable of Simplex, dicts {'id','dim','facets','signs'}
      or tuples (id,dim,facets[,signs])
     :param vertex_sets: optional dict id -> vertex id tuple
     :returns: SimplicialComplex
    """
    ss = {}
    for e in entries:
        sid,dim,facets,signs = _entry_(e)
        sid,dim,facets = int(sid),int(dim),tuple(int(f) for f in facets)
        if sid in ss: raise DuplicateId("duplicate simplex id {0}".format(sid))
        if dim < 0: raise BadDimension("simplex {0} has negative dimension".format(sid))
        if dim == 0 and facets: raise BadDimension("vertex {0} cannot have facets".format(sid))
        if dim > 0 and len(facets) != dim+1:
            raise BadDimension("simplex {0} of dim {1} has {2} facets".format(sid,dim,len(facets)))
        signs = (1,)*len(facets) if signs is None else tuple(int(x) for x in signs)
        if len(signs) != len(facets) or any(x not in (1,-1) for x in signs):
            raise BadSigns("simplex {0} signs must be one +1/-1 per facet".format(sid))
        ss[sid] = Simplex(sid,dim,facets,signs)
    for s in ss.values():
        for f in s.facets:
            if f not in ss: raise NotClosed("simplex {0} references missing face {1}".format(s.id,f))
            if ss[f].dim != s.dim-1:
                raise BadDimension("simplex {0} has facet {1} of dim {2}".format(s.id,f,ss[f].dim))
    K = SimplicialComplex(ss.values(),vertex_sets)
    _check_chain_(K)
    return K

def _check_chain_(K):
    """ raises NotChain unless the boundary of every boundary is zero """
    for s in K:
        if s.dim < 2: continue
        acc = defaultdict(int)
        for f,c in K.boundary(s.id).items():
            for g,d in K.boundary(f).items(): acc[g] += c*d
        bad = [g for g,c in acc.items() if c]
        if bad: raise NotChain("boundary of boundary of {0} is nonzero at {1}".format(s.id,bad[0]))

def complex_from_facets(maximal,start=0):
    """
     closes a vertex-set description
     :param maximal: iterable of vertex tuples (the maximal simplices)
     :param start: first id to assign
     :returns: SimplicialComplex with vertex sets. Vertices take ids first (in
      sorted label order) followed by edges etc, each dimension sorted by vertex
      tuple. Vertex labels are replaced by vertex ids
    """
    faces = set()
    for m in maximal:
        m = tuple(sorted(set(m)))
        for r in range(1,len(m)+1): faces.update(itertools.combinations(m,r))
    if not faces: return SimplicialComplex([],{})
    labels = sorted(v for (v,) in (f for f in faces if len(f) == 1))
    vid = {v:start+i for i,v in enumerate(labels)}
    vfaces = sorted({tuple(sorted(vid[v] for v in f)) for f in faces},key=lambda f:(len(f),f))
    ids = {f:start+i for i,f in enumerate(vfaces)}
    entries = []
    for f,sid in ids.items():
        facets = () if len(f) == 1 else tuple(ids[f[:i]+f[i+1:]] for i in range(len(f)))
        entries.append((sid,len(f)-1,facets))
    return complex_from_simplices(entries,{sid:f for f,sid in ids.items()})

#### INVARIANTS

def euler_characteristic(K):
    """ :returns: sum over simplices of (-1)^dim """
    return sum(1 if s.dim % 2 == 0 else -1 for s in K)

def betti_numbers(K):
    """
     :param K: the complex
     :returns: tuple of rational Betti numbers b_0..b_dim
    """
    if K.dim < 0: return ()
    n = K.counts()
    rk = [0]*(K.dim+2) # rk[d] = rank of boundary C_d -> C_d-1
    for d in range(1,K.dim+1): rk[d] = linalg.bareiss_rank(K.boundary_matrix(d))
    return tuple(n[i] - rk[i] - rk[i+1] for i in range(K.dim+1))

def subcomplex(K,ids):
    """
     :param K: the complex
     :param ids: face-closed subset of the ids of K
     :returns: the restriction of K to ids
    """
    ids = set(ids)
    for sid in ids:
        if sid not in K: raise NotClosed("simplex {0} is not in the complex".format(sid))
        for f in K.facets(sid):
            if f not in ids: raise NotClosed("face {0} of {1} is missing".format(f,sid))
    vs = None
    if K.has_vertex_sets: vs = {sid:K.vertices(sid) for sid in ids}
    return SimplicialComplex([K[sid] for sid in ids],vs)

def connected_components(K):
    """ :returns: number of connected components of K """
    p = Partition(K.ids())
    for s in K:
        for f in s.facets: p.union(s.id,f)
    return p.count()

class Partition(object):
    """ union-find over hashable items """
    def __init__(self,items=()):
        self._parent = {}
        for x in items: self._parent[x] = x

    def add(self,x): self._parent.setdefault(x,x)

    def find(self,x):
        root = x
        while self._parent[root] != root: root = self._parent[root]
        while self._parent[x] != root: self._parent[x],x = root,self._parent[x]
        return root

    def union(self,x,y):
        rx,ry = self.find(x),self.find(y)
        if rx != ry: self._parent[max(rx,ry)] = min(rx,ry)

    def count(self):
        return sum(1 for x in self._parent if self.find(x) == x)

    def blocks(self):
        """ :returns: dict root -> list of items (in insertion order) """
        out = defaultdict(list)
        for x in self._parent: out[self.find(x)].append(x)
        return out
