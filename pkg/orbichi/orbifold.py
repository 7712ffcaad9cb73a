#!/usr/bin/env python

""" orbifold.py: orbifolds as labeled complexes and as global quotients

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

An orbifold is presented by a labeled complex: a simplicial complex in which
every simplex carries a finite (isotropy) group and every (simplex, facet
position) pair a monomorphism from the simplex's group into the facet's group.
Isotropy is constant on open simplices and can only grow on lower strata.

A labeled complex may declare a boundary, a face-closed subcomplex containing
no top-dimensional simplex.

A finite group acting simplicially and regularly on a complex (any element
fixing a simplex setwise fixes its vertices) has a quotient which is again
a labeled complex, see global_quotient.

"""

__name__ = 'orbifold'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import logging
import itertools
import orbichi.groups as groups
import orbichi.simplicial as simplicial

log = logging.getLogger('orbichi.orbifold')

class error(ValueError): pass
class BadLabels(error): pass
class NotAnAction(error): pass

class NotRegular(error):
    """ an element fixes a simplex setwise but moves one of its vertices """
    def __init__(self,element,simplex):
        error.__init__(self,"element {0} fixes simplex {1} but moves a vertex".format(element,simplex))
        self.element = element
        self.simplex = simplex

TRIVIAL = '1' # reserved id of the trivial group

class LabeledComplex(object):
    """
     A simplicial complex with isotropy labels.
      complex: the underlying SimplicialComplex
      groups: dict group id -> FiniteGroup (always holds TRIVIAL)
      labels: dict simplex id -> group id (every simplex has one)
      face_monos: dict (simplex id,facet position) -> Monomorphism from the
       group of the simplex into the group of the facet
      boundary: frozenset of simplex ids
      shift_data: None or dict group id -> {element: ((m_i,m),...)}
      name: text

     LabeledComplex does not check its invariants, see validate
    """
    def __init__(self,complex,groups_,labels,face_monos,boundary=(),shift_data=None,name=''):
        self._K = complex
        self._groups = dict(groups_)
        if TRIVIAL not in self._groups: self._groups[TRIVIAL] = groups.trivial()
        self._labels = {sid:labels.get(sid,TRIVIAL) for sid in complex.ids()}
        self._monos = dict(face_monos)
        self._bd = frozenset(boundary)
        self._shift = shift_data
        self._name = name

    def __repr__(self):
        return "LabeledComplex({0},dim={1},simplices={2})".format(self._name,self.dimension,len(self._K))

    def __eq__(self,other):
        if not isinstance(other,LabeledComplex): return False
        return (self._name,self._K,self._labels,self._bd,self._shift) == \
               (other._name,other._K,other._labels,other._bd,other._shift) and \
               {g:self._groups[g] for g in self.used_groups()} == \
               {g:other._groups[g] for g in other.used_groups()} and \
               {k:m.map for k,m in self._monos.items()} == \
               {k:m.map for k,m in other._monos.items()}

    def __ne__(self,other): return not self == other

    @property
    def complex(self): return self._K

    @property
    def groups(self): return self._groups

    @property
    def labels(self): return self._labels

    @property
    def face_monos(self): return self._monos

    @property
    def boundary(self): return self._bd

    @property
    def shift_data(self): return self._shift

    @property
    def name(self): return self._name

    @property
    def dimension(self): return self._K.dim

    @property
    def is_closed(self): return not self._bd

    def group_of(self,sid):
        """ :returns: the FiniteGroup labeling simplex sid """
        return self._groups[self._labels[sid]]

    def mono(self,sid,pos):
        """ :returns: the face monomorphism of (sid,pos) or None """
        return self._monos.get((sid,pos))

    def used_groups(self):
        """ :returns: sorted ids of the groups labeling some simplex """
        return sorted(set(self._labels.values()))

    def with_shift_data(self,shift_data):
        """ :returns: copy of this complex carrying shift_data """
        return LabeledComplex(self._K,self._groups,self._labels,self._monos,
                              self._bd,shift_data,self._name)

#### VALIDATION

def validate(L):
    """
     checks all invariants of a labeled complex
     :param L: the LabeledComplex
     :returns: list of tuples t = (location,message), empty when L is valid
    """
    err = []
    K = L.complex
    for sid in K.ids():
        gid = L.labels[sid]
        if gid not in L.groups:
            err.append(('label.{0}'.format(sid),"unknown group '{0}'".format(gid)))
    if err: return err

    for s in K:
        G = L.group_of(s.id)
        for pos,f in enumerate(s.facets):
            loc = 'face_mono.{0}.{1}'.format(s.id,pos)
            m = L.mono(s.id,pos)
            if m is None:
                err.append((loc,'missing face_mono'))
                continue
            if m.source != G: err.append((loc,'face_mono source mismatch'))
            if m.target != L.group_of(f): err.append((loc,'face_mono target mismatch'))
            if L.group_of(f).order % G.order:
                err.append((loc,'order of group does not divide facet group order'))
    for (sid,pos) in L.face_monos:
        if sid not in K or pos >= len(K.facets(sid)):
            err.append(('face_mono.{0}.{1}'.format(sid,pos),'face_mono for unknown facet'))

    for sid in sorted(L.boundary):
        loc = 'boundary.{0}'.format(sid)
        if sid not in K:
            err.append((loc,'boundary simplex not in complex'))
            continue
        if K[sid].dim == K.dim: err.append((loc,'top simplex in boundary'))
        if any(f not in L.boundary for f in K.facets(sid)):
            err.append((loc,'boundary not face-closed'))

    if not any(loc.startswith('face_mono') for loc,_ in err):
        err.extend(_coherence_(L))
    return err

def _coherence_(L):
    """
     every two facet paths s -> t -> r must induce the same map on conjugacy
     classes, otherwise the sector complexes are not chain complexes
    """
    err = []
    K = L.complex
    for s in K:
        if s.dim < 2: continue
        seen = {}
        for pa,t in enumerate(s.facets):
            m1 = L.mono(s.id,pa).class_map
            for pb,r in enumerate(K.facets(t)):
                m2 = L.mono(t,pb).class_map
                cm = tuple(m2[c] for c in m1)
                if seen.setdefault(r,cm) != cm:
                    err.append(('face_mono.{0}'.format(s.id),
                                'incoherent class maps into face {0}'.format(r)))
                    break
    return err

def restrict(L,ids,boundary=None,name=None):
    """
     :param L: the LabeledComplex
     :param ids: face-closed set of simplex ids
     :param boundary: boundary of the restriction (default: L's boundary within ids
      less any top simplices of the restriction)
     :param name: name of the restriction
     :returns: the labeled complex on ids
    """
    K = simplicial.subcomplex(L.complex,ids)
    if boundary is None:
        boundary = {sid for sid in L.boundary if sid in K and K[sid].dim < K.dim}
    monos = {k:m for k,m in L.face_monos.items() if k[0] in K}
    labels = {sid:L.labels[sid] for sid in K.ids()}
    return LabeledComplex(K,L.groups,labels,monos,boundary,L.shift_data,
                          L.name if name is None else name)

def boundary_part(L):
    """ :returns: the closed labeled complex on the boundary of L """
    return restrict(L,L.boundary,(),"boundary of {0}".format(L.name))

def trivially_labeled(K,boundary=(),name=''):
    """ :returns: K with every simplex labeled by the trivial group """
    T = groups.trivial()
    monos = {(s.id,i):groups.Monomorphism(T,T,(0,)) for s in K for i in range(len(s.facets))}
    return LabeledComplex(K,{TRIVIAL:T},{},monos,boundary,None,name)

#### GROUP ACTIONS

class GroupAction(object):
    """
     a finite group acting simplicially on a complex with vertex sets
      group: FiniteGroup
      complex: SimplicialComplex (built from vertex sets)
      vertex_perm: tuple, element -> dict vertex id -> vertex id
      boundary: invariant face-closed set of simplex ids
    """
    def __init__(self,group,complex,vertex_perm,boundary=()):
        self._G = group
        self._K = complex
        self._vp = tuple(dict(p) for p in vertex_perm)
        self._bd = frozenset(boundary)
        self._img = None

    def __repr__(self):
        return "GroupAction({0} on {1})".format(self._G.name,self._K)

    @property
    def group(self): return self._G

    @property
    def complex(self): return self._K

    @property
    def vertex_perm(self): return self._vp

    @property
    def boundary(self): return self._bd

    def image(self,g,sid):
        """ :returns: the id of the simplex g.sid """
        if self._img is None:
            K = self._K
            self._img = [{sid:K.find(p[v] for v in K.vertices(sid)) for sid in K.ids()}
                         for p in self._vp]
        return self._img[g][sid]

    def fixes(self,g,sid):
        """ :returns: True if g fixes every vertex of sid """
        p = self._vp[g]
        return all(p[v] == v for v in self._K.vertices(sid))

def group_action(group,complex,vertex_perm,boundary=()):
    """
     validates and returns a group action
     :param group: FiniteGroup
     :param complex: SimplicialComplex with vertex sets
     :param vertex_perm: sequence (one per element) of dicts or sequences
      vertex id -> vertex id
     :param boundary: invariant face-closed set of simplex ids
     :returns: GroupAction
    """
    K = complex
    if not K.has_vertex_sets: raise NotAnAction("complex must be built from vertex sets")
    if len(vertex_perm) != group.order:
        raise NotAnAction("need one vertex permutation per group element")
    verts = K.ids(0)
    perms = []
    for g,p in enumerate(vertex_perm):
        if not isinstance(p,dict): p = {v:p[v] for v in verts}
        if sorted(p) != verts or sorted(p.values()) != verts:
            raise NotAnAction("element {0} does not permute the vertices".format(g))
        perms.append(p)
    for g,p in enumerate(perms):
        for sid in K.ids():
            if K.find(p[v] for v in K.vertices(sid)) is None:
                raise NotAnAction("element {0} maps simplex {1} to a non-simplex".format(g,sid))
    if any(p[v] != v for v in verts for p in perms[:1]):
        raise NotAnAction("identity element must act trivially")
    for g in range(group.order):
        for h in range(group.order):
            gh = perms[group.mul(g,h)]
            if any(gh[v] != perms[g][perms[h][v]] for v in verts):
                raise NotAnAction("vertex permutations are not a homomorphism at ({0},{1})".format(g,h))
    a = GroupAction(group,K,perms,boundary)
    bd = set(boundary)
    if K.closure(bd) != bd: raise NotAnAction("boundary is not face-closed")
    if any(a.image(g,sid) not in bd for g in range(group.order) for sid in bd):
        raise NotAnAction("boundary is not invariant")
    return a

def action_from_permutations(complex,generators,boundary=()):
    """
     :param complex: SimplicialComplex with vertex sets and vertex ids 0..n-1
     :param generators: vertex permutations as tuples p with p[v] the image of v
     :param boundary: invariant face-closed set of simplex ids
     :returns: the GroupAction of the group the generators generate
    """
    G,elements = groups.group_from_permutations(generators)
    if not generators: elements = [tuple(complex.ids(0))]
    return group_action(G,complex,[dict(enumerate(p)) for p in elements],boundary)

def trivial_action(K,boundary=()):
    """ :returns: the trivial group acting on K """
    return group_action(groups.trivial(),K,[{v:v for v in K.ids(0)}],boundary)

def check_regular(a):
    """ raises NotRegular unless every setwise stabilizer fixes its simplex pointwise """
    for sid in a.complex.ids():
        for g in range(1,a.group.order):
            if a.image(g,sid) == sid and not a.fixes(g,sid): raise NotRegular(g,sid)

def is_regular(a):
    """ :returns: True if the action is regular """
    try:
        check_regular(a)
    except NotRegular:
        return False
    return True

def fixed_ids(a,elements):
    """ :returns: ids of simplices fixed pointwise by every one of elements """
    return {sid for sid in a.complex.ids() if all(a.fixes(g,sid) for g in elements)}

def _sign_(seq):
    """ :returns: sign of the permutation that sorts seq (distinct items) """
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i+1,len(seq)):
            if seq[i] > seq[j]: s = -s
    return s

def global_quotient(a,name='quotient'):
    """
     the quotient of a regular action as a labeled complex. Simplices are the
     orbits (numbered in order of their least member id, which is the orbit
     representative), labeled by the stabilizer of the representative.
     Distinct nontrivial stabilizers get the ids G1, G2, ... in order of
     first appearance
     :param a: GroupAction
     :param name: name of the quotient
     :returns: LabeledComplex
    """
    check_regular(a)
    G,K = a.group,a.complex

    # orbits: representative = least id, carrier[sid] = g with g.rep = sid
    orbit,carrier,reps = {},{},[]
    for sid in K.ids():
        if sid in orbit: continue
        o = len(reps)
        reps.append(sid)
        for g in range(G.order):
            t = a.image(g,sid)
            if t not in orbit:
                orbit[t] = o
                carrier[t] = g

    def orient(sid):
        # compares carrier(rep) applied to the sorted vertices of the rep with
        # the sorted vertices of sid
        p = a.vertex_perm[carrier[sid]]
        return _sign_([p[v] for v in K.vertices(reps[orbit[sid]])])

    # stabilizers become the labels, equal stabilizers share a group
    stabs,labels,gids = {},{},{}
    count = 0
    for o,r in enumerate(reps):
        st = frozenset(g for g in range(G.order) if a.image(g,r) == r)
        if st not in gids:
            if len(st) == 1: gids[st] = TRIVIAL
            else:
                count += 1
                gids[st] = 'G{0}'.format(count)
            H,members = groups.subgroup(G,st,"stab({0})".format(o))
            stabs[st] = (H if len(st) > 1 else None,members)
        labels[o] = gids[st]
    table = {gids[st]:H for st,(H,_) in stabs.items() if H is not None}

    entries,monos = [],{}
    for o,r in enumerate(reps):
        s = K[r]
        src = frozenset(g for g in range(G.order) if a.image(g,r) == r)
        _,smembers = stabs[src]
        facets,signs = [],[]
        for pos,f in enumerate(s.facets):
            fo = orbit[f]
            facets.append(fo)
            signs.append(orient(f))
            # conjugate the stabilizer of r into the stabilizer of the
            # representative of the facet orbit
            c = G.inv(carrier[f])
            dst = frozenset(g for g in range(G.order) if a.image(g,reps[fo]) == reps[fo])
            _,dmembers = stabs[dst]
            dpos = {g:i for i,g in enumerate(dmembers)}
            monos[(o,pos)] = [dpos[G.conjugate(h,c)] for h in smembers]
        entries.append((o,s.dim,facets,signs))
    Q = simplicial.complex_from_simplices(entries)

    allg = dict(table)
    allg[TRIVIAL] = groups.trivial()
    fm = {}
    for (o,pos),mp in monos.items():
        src,dst = allg[labels[o]],allg[labels[Q.facets(o)[pos]]]
        fm[(o,pos)] = groups.Monomorphism(src,dst,mp)
    boundary = {orbit[sid] for sid in a.boundary}
    log.debug("quotient of %d simplices by %s has %d orbits",len(K),G.name,len(reps))
    return LabeledComplex(Q,allg,labels,fm,boundary,None,name)

def subdivide(a):
    """
     barycentric subdivision of the complex acted on. Vertices of the
     subdivision are the simplices of the original complex (vertex id of the
     barycenter of sid is sid's position in id order) and the group acts by
     moving barycenters. The result is always regular
     :param a: GroupAction
     :returns: GroupAction on the subdivision
    """
    K = a.complex
    old = K.ids()
    chains = []
    for m in K.maximal():
        vs = K.vertices(m)
        for order in itertools.permutations(vs):
            chains.append(tuple(K.find(order[:i+1]) for i in range(len(order))))
    S = simplicial.complex_from_facets(chains)
    # complex_from_facets numbers vertices by sorted label i.e. by old id
    bary = {sid:new for new,sid in enumerate(old)}
    perms = []
    for g in range(a.group.order):
        perms.append({bary[sid]:bary[a.image(g,sid)] for sid in K.ids()})
    boundary = set()
    for sid in S.ids():
        if all(old[v] in a.boundary for v in S.vertices(sid)):
            boundary.add(sid)
    return group_action(a.group,S,perms,boundary)
