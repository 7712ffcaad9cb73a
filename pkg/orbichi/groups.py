#!/usr/bin/env python

""" groups.py: finite groups as multiplication tables

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

Provides finite groups in Cayley table form (element 0 is always the identity),
their conjugacy classes and centralizers, and monomorphisms between groups
together with the maps they induce on conjugacy classes.

NOTE:
 every check here is exhaustive i.e. associativity is tested on all triples.
 Tables are meant for isotropy groups (tens of elements) not for large groups

"""

__name__ = 'groups'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import logging
from collections import namedtuple
from sympy.combinatorics import Permutation,PermutationGroup

log = logging.getLogger('orbichi.groups')

class error(ValueError): pass
class NotAGroup(error): pass
class NotMonomorphism(error): pass
class ClosureOverflow(error): pass

CLOSURE_CAP = 10000 # max elements enumerated when closing generators

# a conjugacy class, representative is always the least member
ConjugacyClass = namedtuple('ConjugacyClass','representative members')

class FiniteGroup(object):
    """
     A finite group stored as its multiplication table over the element
     indices 0..order-1, 0 being the identity. Instances are immutable, the
     conjugacy classes are computed once at construction and centralizers are
     cached as requested.

     Use group_from_table, cyclic or dihedral to create a validated group,
     the constructor itself trusts its table.
    """
    def __init__(self,table,name=None):
        self._table = tuple(tuple(row) for row in table)
        self._name = name
        n = len(self._table)
        self._inv = tuple(next(j for j in range(n) if self._table[i][j] == 0)
                          for i in range(n))
        self._classes,self._cidx = _classes_(self)
        self._cent = {}

    def __repr__(self):
        return "FiniteGroup({0},order={1})".format(self.name,self.order)

    def __eq__(self,other):
        return isinstance(other,FiniteGroup) and self._table == other._table

    def __ne__(self,other): return not self == other
    def __hash__(self): return hash(self._table)
    def __len__(self): return len(self._table)
    def __iter__(self): return iter(range(len(self._table)))

    @property
    def name(self):
        """ :returns: the label of the group """
        return self._name if self._name is not None else "group({0})".format(self.order)

    @property
    def order(self): return len(self._table)

    @property
    def table(self): return self._table

    @property
    def classes(self):
        """ :returns: conjugacy classes ordered by least member """
        return self._classes

    @property
    def is_abelian(self): return len(self._classes) == self.order

    def mul(self,i,j): return self._table[i][j]
    def inv(self,i): return self._inv[i]

    def power(self,i,e):
        """
         :param i: element index
         :param e: integer exponent (may be negative)
         :returns: i^e
        """
        if e < 0: i,e = self._inv[i],-e
        x = 0
        for _ in range(e): x = self._table[x][i]
        return x

    def element_order(self,i):
        """ :returns: the order of element i """
        x,k = i,1
        while x != 0:
            x = self._table[x][i]
            k += 1
        return k

    def conjugate(self,g,h):
        """ :returns: h*g*h^-1 """
        return self._table[self._table[h][g]][self._inv[h]]

    def class_index(self,g):
        """ :returns: index into classes of the class containing g """
        return self._cidx[g]

    def class_of(self,g): return self._classes[self._cidx[g]]

    def centralizer(self,g):
        """ :returns: frozenset of elements commuting with g """
        try:
            return self._cent[g]
        except KeyError:
            t = self._table
            c = frozenset(h for h in range(self.order) if t[h][g] == t[g][h])
            self._cent[g] = c
            return c

def _classes_(G):
    """ computes the conjugacy classes of G by brute force conjugation """
    n = len(G._table)
    cidx = [None]*n
    classes = []
    for g in range(n):
        if cidx[g] is not None: continue
        members = tuple(sorted({G.conjugate(g,h) for h in range(n)}))
        for m in members: cidx[m] = len(classes)
        classes.append(ConjugacyClass(g,members))
    return tuple(classes),tuple(cidx)

#### CONSTRUCTORS

def group_from_table(table,name=None):
    """
     validates and returns the group with multiplication table
     :param table: square sequence of sequences of element indices
     :param name: optional label
     :returns: a FiniteGroup, re-indexed so that the identity is element 0
    """
    try:
        rows = [[int(x) for x in row] for row in table]
    except (TypeError,ValueError):
        raise NotAGroup("table entries must be integers")
    n = len(rows)
    if n < 1: raise NotAGroup("table must have side >= 1")
    for i,row in enumerate(rows):
        if len(row) != n: raise NotAGroup("row {0} has length {1} not {2}".format(i,len(row),n))
        for x in row:
            if x < 0 or x >= n: raise NotAGroup("entry {0} in row {1} is out of range".format(x,i))

    # find the two-sided identity and move it to 0
    e = None
    for i in range(n):
        if all(rows[i][j] == j and rows[j][i] == j for j in range(n)):
            e = i
            break
    if e is None: raise NotAGroup("no two-sided identity")
    if e != 0:
        p = list(range(n))
        p[0],p[e] = e,0
        rows = _reindex_(rows,p)

    # inverses then associativity on every triple
    for i in range(n):
        if not any(rows[i][j] == 0 and rows[j][i] == 0 for j in range(n)):
            raise NotAGroup("element {0} has no two-sided inverse".format(i))
    for i in range(n):
        for j in range(n):
            ij = rows[i][j]
            for k in range(n):
                if rows[ij][k] != rows[i][rows[j][k]]:
                    raise NotAGroup("({0}*{1})*{2} != {0}*({1}*{2})".format(i,j,k))
    return FiniteGroup(rows,name)

def _reindex_(rows,p):
    """ relabels element i as p[i] (p is a permutation) """
    n = len(rows)
    out = [[0]*n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[p[i]][p[j]] = p[rows[i][j]]
    return out

def trivial():
    """ :returns: the group of order 1 """
    return FiniteGroup([[0]],'trivial')

def cyclic(k):
    """
     :param k: order >= 1
     :returns: the cyclic group Z_k with i*j = (i+j) mod k
    """
    if k < 1: raise error("cyclic order {0} must be >= 1".format(k))
    return FiniteGroup([[(i+j) % k for j in range(k)] for i in range(k)],"cyclic({0})".format(k))

def dihedral(k):
    """
     the dihedral group of order 2k <r,s | r^k = s^2 = 1, srs = r^-1> where
     element a + k*b is r^a s^b. i.e. for k = 3: 0:1 1:r 2:r^2 3:s 4:rs 5:r^2s
     :param k: rotation order >= 1
     :returns: dihedral group
    """
    if k < 1: raise error("dihedral parameter {0} must be >= 1".format(k))
    def mul(x,y):
        (b,a),(d,c) = divmod(x,k),divmod(y,k)
        # r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
        return (a + (c if b == 0 else -c)) % k + k*((b+d) % 2)
    n = 2*k
    return FiniteGroup([[mul(i,j) for j in range(n)] for i in range(n)],"dihedral({0})".format(k))

def group_from_permutations(generators,cap=None):
    """
     closes the permutation generators under composition
     :param generators: sequence of permutations (tuples p with p[v] the image of v)
     :param cap: max number of elements (defaults to CLOSURE_CAP)
     :returns: tuple t = (FiniteGroup,elements) where elements[i] is the
      permutation of element i. (p*q)[v] = p[q[v]] i.e. q acts first
    """
    cap = CLOSURE_CAP if cap is None else cap
    gens = [tuple(g) for g in generators]
    if not gens: return trivial(),[()]
    n = len(gens[0])
    if any(len(g) != n or sorted(g) != list(range(n)) for g in gens):
        raise error("generators must be permutations of 0..{0}".format(n-1))
    P = PermutationGroup([Permutation(list(g),size=n) for g in gens])
    if P.order() > cap:
        raise ClosureOverflow("closure has {0} elements, cap is {1}".format(P.order(),cap))
    ident = tuple(range(n))
    elements = [ident]
    for p in P.generate():
        x = tuple(p.array_form)
        if x != ident: elements.append(x)
    index = {x:i for i,x in enumerate(elements)}
    table = [[index[tuple(p[q[v]] for v in range(n))] for q in elements] for p in elements]
    log.debug("closed %d generators to %d elements",len(gens),len(elements))
    return FiniteGroup(table,"perm({0})".format(len(elements))),elements

def subgroup(G,elements,name=None):
    """
     :param G: the ambient group
     :param elements: elements of a subgroup of G (must contain 0 & be closed)
     :param name: optional label
     :returns: tuple t = (FiniteGroup,members) where members[i] is the element
      of G that is element i of the subgroup (members[0] = 0, sorted)
    """
    members = sorted(set(elements))
    if not members or members[0] != 0: raise NotAGroup("subgroup must contain the identity")
    pos = {g:i for i,g in enumerate(members)}
    try:
        table = [[pos[G.mul(a,b)] for b in members] for a in members]
    except KeyError:
        raise NotAGroup("elements are not closed under multiplication")
    return FiniteGroup(table,name),members

#### QUERIES

def conjugacy_classes(G):
    """ :returns: the conjugacy classes of G ordered by least member """
    return G.classes

def centralizer(G,g):
    """
     :param G: the group
     :param g: element index
     :returns: set of elements h with hg = gh
    """
    if g < 0 or g >= G.order: raise error("element {0} not in {1}".format(g,G.name))
    return G.centralizer(g)

#### MONOMORPHISMS

class Monomorphism(object):
    """
     an injective homomorphism source -> target, map[i] is the image of
     source element i
    """
    def __init__(self,source,target,mapping):
        self._source = source
        self._target = target
        self._map = tuple(mapping)
        self._cmap = tuple(target.class_index(self._map[c.representative])
                           for c in source.classes)

    def __repr__(self):
        return "Monomorphism({0}->{1},{2})".format(self._source.name,self._target.name,list(self._map))

    def __eq__(self,other):
        return isinstance(other,Monomorphism) and \
               (self._source,self._target,self._map) == (other._source,other._target,other._map)

    def __ne__(self,other): return not self == other
    def __hash__(self): return hash(self._map)
    def __call__(self,i): return self._map[i]

    @property
    def source(self): return self._source

    @property
    def target(self): return self._target

    @property
    def map(self): return self._map

    @property
    def class_map(self):
        """ :returns: tuple, source class index -> target class index """
        return self._cmap

def monomorphism(H,G,mapping):
    """
     validates and returns a monomorphism
     :param H: source group
     :param G: target group
     :param mapping: sequence of target indices, one per source element
     :returns: Monomorphism
    """
    try:
        m = [int(x) for x in mapping]
    except (TypeError,ValueError):
        raise NotMonomorphism("map entries must be integers")
    if len(m) != H.order:
        raise NotMonomorphism("map has {0} entries, source has order {1}".format(len(m),H.order))
    if any(x < 0 or x >= G.order for x in m): raise NotMonomorphism("map entry out of range")
    if m[0] != 0: raise NotMonomorphism("identity must map to identity")
    if len(set(m)) != len(m): raise NotMonomorphism("map is not injective")
    for i in range(H.order):
        for j in range(H.order):
            if m[H.mul(i,j)] != G.mul(m[i],m[j]):
                raise NotMonomorphism("map({0}*{1}) != map({0})*map({1})".format(i,j))
    return Monomorphism(H,G,m)

def trivial_monomorphism(H,G):
    """ :returns: the unique monomorphism from a trivial group H into G """
    if H.order != 1: raise NotMonomorphism("source is not trivial")
    return Monomorphism(H,G,(0,))

def induced_class_map(m):
    """
     :param m: a monomorphism H -> G
     :returns: dict class of h in H -> class of m(h) in G
    """
    return {c:m.target.classes[t] for c,t in zip(m.source.classes,m.class_map)}
