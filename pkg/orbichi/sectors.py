#!/usr/bin/env python

""" sectors.py: twisted sectors of a labeled complex

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

An atom is a pair (simplex,conjugacy class of the simplex's group). Atoms are
identified along every face monomorphism (the class of h in G_s is identified
with the class of its image in G_f) and the resulting equivalence classes are
the sectors. Each sector is a cell complex whose cells are its atoms, the
boundary of an atom being the boundary of its simplex with every facet
replaced by the atom over it.

The sector holding the identity classes is the nontwisted sector and always
comes first.

"""

__name__ = 'sectors'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import logging
from collections import namedtuple
from fractions import Fraction
import orbichi.simplicial as simplicial

log = logging.getLogger('orbichi.sectors')

class error(ValueError): pass
class InconsistentShift(error): pass
class MissingShiftData(error): pass
class BadShiftData(error): pass

# the cell (simplex,class) where cclass indexes group_of(simplex).classes
SectorAtom = namedtuple('SectorAtom','simplex cclass')

MODES = ('underlying','orbifold','inner_orbifold','boundary_orbifold')

class Sector(object):
    """
     one equivalence class of atoms
      index: position in the decomposition (0 is the nontwisted sector)
      atoms: tuple of SectorAtom, ordered by (dim,simplex,class), atom i is
       cell i of complex
      complex: the sector cell complex
      centralizer_orders: order of the centralizer of the class of each atom
      boundary: frozenset of the cells lying over the boundary
      codimension: dimension of the labeled complex less the sector dimension
    """
    def __init__(self,index,atoms,complex,centralizers,boundary,ambient):
        self._index = index
        self._atoms = tuple(atoms)
        self._K = complex
        self._cent = tuple(centralizers)
        self._bd = frozenset(boundary)
        self._ambient = ambient
        self._cells = {a:i for i,a in enumerate(self._atoms)}

    def __repr__(self):
        return "Sector({0},atoms={1},dim={2})".format(self._index,len(self._atoms),self.dimension)

    def __len__(self): return len(self._atoms)
    def __contains__(self,atom): return atom in self._cells

    @property
    def index(self): return self._index

    @property
    def atoms(self): return self._atoms

    @property
    def complex(self): return self._K

    @property
    def centralizer_orders(self): return self._cent

    @property
    def boundary(self): return self._bd

    @property
    def is_nontwisted(self): return self._index == 0

    @property
    def dimension(self): return self._K.dim

    @property
    def codimension(self): return self._ambient - self._K.dim

    @property
    def connected_components(self): return simplicial.connected_components(self._K)

    def cell(self,atom):
        """ :returns: the cell id of atom in the sector complex """
        return self._cells[atom]

class SectorDecomposition(object):
    """ the atoms of a labeled complex and the sectors they fall into """
    def __init__(self,L,atoms,sectors):
        self._L = L
        self._atoms = tuple(atoms)
        self._sectors = tuple(sectors)
        self._of = {a:s.index for s in self._sectors for a in s.atoms}

    def __repr__(self):
        return "SectorDecomposition({0},sectors={1})".format(self._L.name,len(self._sectors))

    def __len__(self): return len(self._sectors)
    def __iter__(self): return iter(self._sectors)
    def __getitem__(self,i): return self._sectors[i]

    @property
    def labeled(self): return self._L

    @property
    def atoms(self): return self._atoms

    @property
    def sectors(self): return self._sectors

    @property
    def nontwisted(self): return self._sectors[0]

    @property
    def boundary_atoms(self):
        """ :returns: frozenset of the atoms over boundary simplices """
        return frozenset(a for a in self._atoms if a.simplex in self._L.boundary)

    def sector_of(self,atom):
        """ :returns: the Sector holding atom """
        return self._sectors[self._of[atom]]

def atoms_of(L):
    """ :returns: list of all atoms of L in (simplex id,class) order """
    return [SectorAtom(sid,c) for sid in L.complex.ids()
            for c in range(len(L.group_of(sid).classes))]

def decompose(L):
    """
     :param L: a validated LabeledComplex
     :returns: SectorDecomposition of L
    """
    K = L.complex
    atoms = atoms_of(L)
    p = simplicial.Partition(atoms)
    for s in K:
        for pos,f in enumerate(s.facets):
            for c,t in enumerate(L.mono(s.id,pos).class_map):
                p.union(SectorAtom(s.id,c),SectorAtom(f,t))

    # identity classes form one sector even over a disconnected complex
    ids = K.ids()
    for sid in ids[1:]: p.union(SectorAtom(ids[0],0),SectorAtom(sid,0))

    blocks = p.blocks()
    roots = sorted(blocks)
    if ids: roots.sort(key=lambda r:r != p.find(SectorAtom(ids[0],0)))
    sectors = [_sector_(L,i,blocks[r]) for i,r in enumerate(roots)]
    log.debug("%s: %d atoms in %d sectors",L.name,len(atoms),len(sectors))
    return SectorDecomposition(L,atoms,sectors)

def _sector_(L,index,block):
    """ builds the cell complex of one block of atoms """
    K = L.complex
    atoms = sorted(block,key=lambda a:(K[a.simplex].dim,a.simplex,a.cclass))
    cell = {a:i for i,a in enumerate(atoms)}
    entries,cent,bd = [],[],set()
    for i,a in enumerate(atoms):
        s = K[a.simplex]
        facets = [cell[SectorAtom(f,L.mono(s.id,pos).class_map[a.cclass])]
                  for pos,f in enumerate(s.facets)]
        entries.append((i,s.dim,facets,s.signs))
        G = L.group_of(a.simplex)
        cent.append(G.order // len(G.classes[a.cclass].members))
        if a.simplex in L.boundary: bd.add(i)
    C = simplicial.complex_from_simplices(entries)
    return Sector(index,atoms,C,cent,bd,L.dimension)

def _sector_arg_(dec,t):
    return t if isinstance(t,Sector) else dec[t]

def sector_euler(dec,t,mode='orbifold'):
    """
     :param dec: SectorDecomposition
     :param t: Sector or sector index
     :param mode: one of MODES
     :returns: Euler characteristic of the sector. underlying counts cells,
      the orbifold modes weight each cell by 1/|centralizer|, inner_orbifold
      skips boundary cells and boundary_orbifold keeps only those
    """
    t = _sector_arg_(dec,t)
    if mode not in MODES: raise error("unknown mode '{0}'".format(mode))
    C = t.complex
    if mode == 'underlying': return simplicial.euler_characteristic(C)
    total = Fraction(0)
    for i,c in enumerate(t.centralizer_orders):
        if mode == 'inner_orbifold' and i in t.boundary: continue
        if mode == 'boundary_orbifold' and i not in t.boundary: continue
        total += Fraction(1 if C[i].dim % 2 == 0 else -1,c)
    return total

def sector_betti(dec,t):
    """ :returns: rational Betti numbers of the sector complex """
    return simplicial.betti_numbers(_sector_arg_(dec,t).complex)

#### DEGREE SHIFTS

def shift_data(raw,L):
    """
     validates shift data against L
     :param raw: dict group id -> {element (int or numeric string): [[m_i,m],...]}
     :param L: the LabeledComplex
     :returns: dict group id -> {element: ((m_i,m),...)}
    """
    if L.dimension % 2:
        raise BadShiftData("shift data needs an even dimensional complex")
    n = L.dimension // 2
    if not isinstance(raw,dict): raise BadShiftData("shift data must be a mapping")
    out = {}
    for gid,entries in raw.items():
        if gid not in L.groups: raise BadShiftData("unknown group '{0}'".format(gid))
        if not isinstance(entries,dict):
            raise BadShiftData("shift data of '{0}' must be a mapping".format(gid))
        G = L.groups[gid]
        out[gid] = {}
        for g,pairs in entries.items():
            loc = "{0}.{1}".format(gid,g)
            try:
                g = int(g)
                pairs = tuple((int(mi),int(m)) for mi,m in pairs)
            except (TypeError,ValueError):
                raise BadShiftData("{0}: expected a list of [m_i,m] pairs".format(loc))
            if not 0 <= g < G.order: raise BadShiftData("{0}: no such element".format(loc))
            if len(pairs) != n:
                raise BadShiftData("{0}: expected {1} pairs".format(loc,n))
            for mi,m in pairs:
                if m < 1 or not 0 <= mi < m:
                    raise BadShiftData("{0}: need 0 <= m_i < m".format(loc))
                if G.element_order(g) % m:
                    raise BadShiftData("{0}: {1} does not divide the element order".format(loc,m))
            out[gid][g] = pairs
    return out

def shift_of(pairs):
    """ :returns: sum of m_i/m over the exponent pairs """
    return sum((Fraction(mi,m) for mi,m in pairs),Fraction(0))

def degree_shift(L,shift_data,t,dec=None):
    """
     :param L: the LabeledComplex
     :param shift_data: validated shift data (see shift_data)
     :param t: Sector (or sector index when dec is given)
     :param dec: optional SectorDecomposition t indexes into
     :returns: the degree shifting number of the sector
    """
    t = t if isinstance(t,Sector) else dec[t]
    if t.is_nontwisted: return Fraction(0)
    value = None
    for a in t.atoms:
        gid = L.labels[a.simplex]
        data = shift_data.get(gid,{})
        G = L.groups[gid]
        for g in G.classes[a.cclass].members:
            if g not in data: continue
            v = shift_of(data[g])
            if value is None: value = v
            elif v != value:
                raise InconsistentShift("sector {0}: element {1} of '{2}' shifts by {3} not {4}".format(
                    t.index,g,gid,simplicial.ratstr(v),simplicial.ratstr(value)))
    if value is None: raise MissingShiftData("sector {0} has no shift data".format(t.index))
    return value
