#!/usr/bin/env python

""" gallery.py: example orbifolds, example actions and random labeled complexes

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

Triangulations used throughout:
 octahedron: vertices 0:+x 1:-x 2:+y 3:-y 4:+z 5:-z, one triangle per octant
 ball: cone over the octahedron, apex 6 (or 12 for the figure-8 disk)
 shell: octahedron x [1,2], inner vertex v, outer vertex v+6, each prism
  a<b<c split into abcc' abb'c' aa'b'c'

"""

__name__ = 'gallery'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import itertools
import orbichi.groups as groups
import orbichi.simplicial as simplicial
import orbichi.orbifold as orbifold
from orbichi.orbifold import TRIVIAL

class error(ValueError): pass
class BadParams(error): pass

OCTAHEDRON = [(a,b,c) for a in (0,1) for b in (2,3) for c in (4,5)]
NORTH,SOUTH = 4,5

def _shell_(offset=6):
    """ :returns: maximal tetrahedra of the octahedron times an interval """
    tets = []
    for a,b,c in OCTAHEDRON:
        a_,b_,c_ = a+offset,b+offset,c+offset
        tets.extend([(a,b,c,c_),(a,b,b_,c_),(a,a_,b_,c_)])
    return tets

def _cone_(cells,apex):
    return [tuple(c) + (apex,) for c in cells]

def _cyclic_(k):
    """ :returns: tuple t = (group id,group) for Z_k (the trivial id when k = 1) """
    if k == 1: return TRIVIAL,groups.trivial()
    return 'Z{0}'.format(k),groups.cyclic(k)

def _assemble_(name,K,table,labels,embed=None,boundary=(),shift=None):
    """
     labels the complex K and fills in the face monomorphisms: trivial sources
     map to 0, equal labels map identically, anything else comes from embed
     :param table: dict group id -> FiniteGroup
     :param labels: dict simplex id -> group id
     :param embed: dict (source id,target id) -> map
    """
    table = dict(table)
    table.setdefault(TRIVIAL,groups.trivial())
    embed = embed or {}
    monos = {}
    for s in K:
        src = labels.get(s.id,TRIVIAL)
        for pos,f in enumerate(s.facets):
            dst = labels.get(f,TRIVIAL)
            H,G = table[src],table[dst]
            if src == TRIVIAL: mp = (0,)
            elif src == dst: mp = tuple(range(H.order))
            else: mp = embed[(src,dst)]
            monos[(s.id,pos)] = groups.monomorphism(H,G,mp)
    return orbifold.LabeledComplex(K,table,labels,monos,boundary,shift,name)

def _label_(K,gid,vertex_sets):
    """ :returns: dict simplex id -> gid for each listed vertex set """
    return {K.find(vs):gid for vs in vertex_sets}

def _rotation_shift_(gid,k):
    """ element i of Z_k rotates one complex coordinate by 2*pi*i/k """
    return {gid:{i:((i,k),) if i else ((0,1),) for i in range(k)}}

#### GALLERY

def point_with_group(group,gid='G'):
    """ a point with the trivial action of group """
    K = simplicial.complex_from_facets([(0,)])
    if group.order == 1: gid = TRIVIAL
    shift = {gid:{g:() for g in range(group.order)}}
    return _assemble_('point_with_group',K,{gid:group},{0:gid},shift=shift)

def teardrop(k):
    """ the sphere with one cone point of order k (at +z) """
    K = simplicial.complex_from_facets(OCTAHEDRON)
    gid,G = _cyclic_(k)
    shift = _rotation_shift_(gid,k)
    return _assemble_('teardrop',K,{gid:G},{K.find([NORTH]):gid},shift=shift)

def football(k,l):
    """ the sphere with cone points of orders k (+z) and l (-z) """
    K = simplicial.complex_from_facets(OCTAHEDRON)
    (gk,Gk),(gl,Gl) = _cyclic_(k),_cyclic_(l)
    shift = _rotation_shift_(gk,k)
    shift.update(_rotation_shift_(gl,l))
    labels = {K.find([NORTH]):gk,K.find([SOUTH]):gl}
    return _assemble_('football',K,{gk:Gk,gl:Gl},labels,shift=shift)

def solid_football(k):
    """ the ball with a singular axis of order k through the center 6 """
    K = simplicial.complex_from_facets(_cone_(OCTAHEDRON,6))
    gid,G = _cyclic_(k)
    labels = _label_(K,gid,[(NORTH,),(SOUTH,),(6,),(NORTH,6),(SOUTH,6)])
    boundary = {sid for sid in K.ids() if max(K.vertices(sid)) < 6}
    return _assemble_('solid_football',K,{gid:G},labels,boundary=boundary)

def solid_hollow_football(k,l):
    """
     the shell between two spheres whose interior carries two singular arcs
     joining the poles of the inner and outer spheres, of orders k (+z) and
     l (-z). Both boundary spheres are (k,l)-footballs
    """
    K = simplicial.complex_from_facets(_shell_())
    (gk,Gk),(gl,Gl) = _cyclic_(k),_cyclic_(l)
    labels = _label_(K,gk,[(NORTH,),(NORTH+6,),(NORTH,NORTH+6)])
    labels.update(_label_(K,gl,[(SOUTH,),(SOUTH+6,),(SOUTH,SOUTH+6)]))
    boundary = {sid for sid in K.ids()
                if max(K.vertices(sid)) < 6 or min(K.vertices(sid)) >= 6}
    return _assemble_('solid_hollow_football',K,{gk:Gk,gl:Gl},labels,boundary=boundary)

def sliced_cone(k):
    """
     a disk cut out of the cone of order k by two rays from the cone point
     0, so the cone point lies on the boundary circle 0-1-2-3
    """
    K = simplicial.complex_from_facets([(0,1,2),(0,2,3)])
    gid,G = _cyclic_(k)
    rim = [(0,),(1,),(2,),(3,),(0,1),(1,2),(2,3),(0,3)]
    boundary = {K.find(vs) for vs in rim}
    shift = _rotation_shift_(gid,k)
    return _assemble_('sliced_cone',K,{gid:G},{K.find([0]):gid},boundary=boundary,shift=shift)

# D6 = dihedral(3) with 1:r (rotation by 2pi/3 about z) & 3:s (rotation by pi
# about x)
FIGURE8_EMBED = {('Z2','D6'):(0,3),('Z3','D6'):(0,1,2)}

def figure8_disk():
    """
     a ball (shell around a cone with apex 12) whose interior singular set is
     two edge circles through the hub 12: 12-0-2 of order 2 and 12-1-3 of
     order 3. The hub is labeled D6, only the outer sphere is boundary
    """
    K = simplicial.complex_from_facets(_shell_() + _cone_(OCTAHEDRON,12))
    labels = {K.find([12]):'D6'}
    labels.update(_label_(K,'Z2',[(0,),(2,),(0,12),(0,2),(2,12)]))
    labels.update(_label_(K,'Z3',[(1,),(3,),(1,12),(1,3),(3,12)]))
    table = {'D6':groups.dihedral(3),'Z2':groups.cyclic(2),'Z3':groups.cyclic(3)}
    boundary = {sid for sid in K.ids() if 6 <= min(K.vertices(sid)) and max(K.vertices(sid)) < 12}
    return _assemble_('figure8_disk',K,table,labels,FIGURE8_EMBED,boundary)

def antipodal_ball():
    """ the ball modulo the antipodal map: a cone point of order 2 over RP^2 """
    return orbifold.global_quotient(antipodal_cone(),'antipodal_ball')

EXAMPLES = {'point_with_group':point_with_group,
            'teardrop':teardrop,
            'football':football,
            'solid_football':solid_football,
            'solid_hollow_football':solid_hollow_football,
            'figure8_disk':figure8_disk,
            'sliced_cone':sliced_cone,
            'antipodal_ball':antipodal_ball}

_PARAMS_ = {'point_with_group':('group',),
            'teardrop':('k',),
            'football':('k','l'),
            'solid_football':('k',),
            'solid_hollow_football':('k','l'),
            'figure8_disk':(),
            'sliced_cone':('k',),
            'antipodal_ball':()}

def example(name,**params):
    """
     :param name: one of EXAMPLES
     :param params: k,l (integers >= 1) or group (FiniteGroup) as the example needs
     :returns: the example LabeledComplex
    """
    try:
        build = EXAMPLES[name]
    except KeyError:
        raise BadParams("unknown example '{0}'".format(name))
    need = _PARAMS_[name]
    if sorted(params) != sorted(need):
        raise BadParams("{0} takes parameters {1}".format(name,', '.join(need) or 'none'))
    for p in ('k','l'):
        if p in params:
            v = params[p]
            if isinstance(v,bool) or not isinstance(v,int) or v < 1:
                raise BadParams("{0} must be an integer >= 1".format(p))
    if 'group' in params and not isinstance(params['group'],groups.FiniteGroup):
        raise BadParams("group must be a FiniteGroup")
    return build(**params)

#### ACTIONS

ANTIPODE = (1,0,3,2,5,4)

def antipodal_octahedron():
    """ Z_2 acting on the octahedron by v -> -v """
    K = simplicial.complex_from_facets(OCTAHEDRON)
    return orbifold.action_from_permutations(K,[ANTIPODE])

def antipodal_cone():
    """ Z_2 acting on the cone over the octahedron by v -> -v, apex fixed """
    K = simplicial.complex_from_facets(_cone_(OCTAHEDRON,6))
    boundary = {sid for sid in K.ids() if max(K.vertices(sid)) < 6}
    return orbifold.action_from_permutations(K,[ANTIPODE + (6,)],boundary)

def rotated_suspension(k=3):
    """
     Z_k rotating the suspension of a k-gon (poles 0 and 1, ring 2..k+1),
     the quotient is the (k,k)-football
    """
    if k < 3: raise BadParams("suspension needs a ring of at least 3 vertices")
    ring = [2+i for i in range(k)]
    cells = [(p,ring[i],ring[(i+1) % k]) for p in (0,1) for i in range(k)]
    K = simplicial.complex_from_facets(cells)
    gen = (0,1) + tuple(ring[(i+1) % k] for i in range(k))
    return orbifold.action_from_permutations(K,[gen])

#### RANDOM LABELED COMPLEXES

# ids & groups labeling random complexes
GROUP_POOL = [('Z{0}'.format(k),('cyclic',k)) for k in range(2,7)] + \
             [('D{0}'.format(2*k),('dihedral',k)) for k in range(2,5)]

def _pool_():
    make = {'cyclic':groups.cyclic,'dihedral':groups.dihedral}
    pool = {gid:make[kind](k) for gid,(kind,k) in GROUP_POOL}
    pool[TRIVIAL] = groups.trivial()
    return pool

def random_complex(rng,dim=None):
    """
     a cone or suspension over a random graph (dim 2), coned once more for dim 3
     :param rng: random.Random
     :param dim: 2, 3 or None (random)
     :returns: SimplicialComplex with vertex sets
    """
    dim = rng.choice((2,3)) if dim is None else dim
    if dim not in (2,3): raise BadParams("random complexes have dimension 2 or 3")
    n = rng.randint(3,6)
    edges = [e for e in itertools.combinations(range(n),2) if rng.random() < 0.5] or [(0,1)]
    used = {v for e in edges for v in e}
    base = edges + [(v,) for v in range(n) if v not in used]
    cells = _cone_(base,n)
    if rng.random() < 0.5: cells += _cone_(base,n+1)
    if dim == 3: cells = _cone_(cells,n+2)
    return simplicial.complex_from_facets(cells)

def _generators_(H):
    """ :returns: a greedy generating set of H """
    gens,span = [],{0}
    for x in H:
        if x in span: continue
        gens.append(x)
        frontier = list(span)
        while frontier:
            h = frontier.pop()
            for g in gens:
                y = H.mul(h,g)
                if y not in span:
                    span.add(y)
                    frontier.append(y)
    return gens

def _extend_(H,G,gens,images):
    """ :returns: the map H -> G sending gens to images or None if inconsistent """
    mp,queue = {0:0},[0]
    for h in queue:
        for x,y in zip(gens,images):
            hx,v = H.mul(h,x),G.mul(mp[h],y)
            if hx not in mp:
                mp[hx] = v
                queue.append(hx)
            elif mp[hx] != v:
                return None
    return [mp[i] for i in range(H.order)]

def _embeddings_(H,G):
    """ :returns: list of all monomorphisms H -> G """
    gens = _generators_(H)
    out = []
    for images in itertools.product(range(G.order),repeat=len(gens)):
        if any(G.element_order(y) != H.element_order(x) for x,y in zip(gens,images)): continue
        mp = _extend_(H,G,gens,images)
        if mp is None: continue
        try:
            out.append(groups.monomorphism(H,G,mp))
        except groups.NotMonomorphism:
            pass
    return out

def _coherent_(K,sid,monos,chosen):
    """ True if the monos chosen for sid agree on classes along every facet path """
    seen = {}
    for pa,t in enumerate(K.facets(sid)):
        m1 = chosen[pa].class_map
        for pb,r in enumerate(K.facets(t)):
            m2 = monos[(t,pb)].class_map
            cm = tuple(m2[c] for c in m1)
            if seen.setdefault(r,cm) != cm: return False
    return True

RANDOM_TRIES = 8 # attempts at a coherent nontrivial label before falling back to trivial

def random_labeled(rng,closed=True,dim=None):
    """
     a random labeled complex. Vertices draw groups from the pool. Every higher
     simplex draws a pool group that embeds into all of its facet groups
     (trivial with probability 0.3) with monomorphisms picked at random among
     all embeddings, retrying until the class maps along facet paths agree
     :param rng: random.Random
     :param closed: no boundary when True, else a random boundary
     :param dim: 2, 3 or None
     :returns: LabeledComplex
    """
    pool = _pool_()
    ids = sorted(pool)
    K = random_complex(rng,dim)
    cache = {}
    def embeddings(hid,gid):
        if (hid,gid) not in cache: cache[(hid,gid)] = _embeddings_(pool[hid],pool[gid])
        return cache[(hid,gid)]

    labels,monos = {},{}
    for v in K.ids(0):
        labels[v] = TRIVIAL if rng.random() < 0.4 else rng.choice(ids)
    for d in range(1,K.dim+1):
        for sid in K.ids(d):
            facets = K.facets(sid)
            fits = [h for h in ids if h != TRIVIAL and all(embeddings(h,labels[f]) for f in facets)]
            hid,chosen = TRIVIAL,None
            for _ in range(RANDOM_TRIES):
                if not fits or rng.random() < 0.3: break
                h = rng.choice(fits)
                ms = [rng.choice(embeddings(h,labels[f])) for f in facets]
                if _coherent_(K,sid,monos,ms):
                    hid,chosen = h,ms
                    break
            if chosen is None:
                chosen = [groups.trivial_monomorphism(pool[TRIVIAL],pool[labels[f]]) for f in facets]
            labels[sid] = hid
            for pos,m in enumerate(chosen): monos[(sid,pos)] = m
    boundary = ()
    if not closed:
        faces = [sid for sid in K.ids(K.dim-1) if rng.random() < 0.3] or K.ids(K.dim-1)[:1]
        boundary = K.closure(faces)
    return orbifold.LabeledComplex(K,pool,labels,monos,boundary,None,'random')
