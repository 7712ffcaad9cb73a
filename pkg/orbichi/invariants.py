#!/usr/bin/env python

""" invariants.py: Euler characteristics of labeled complexes and the identities they satisfy

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

All values are exact: integers or fractions.Fraction. Sums over open
simplices are the compactly supported Euler characteristics, i.e.
 chi_orb       = sum_s (-1)^dim s / |G_s|
 chi_orb_inner = the same sum over simplices off the boundary
 chi_roan      = sum_s (-1)^dim s * (number of conjugacy classes of G_s)
 chi_dixon     = 1/|G| sum_{gh=hg} chi(fixed set of g and h)

"""

__name__ = 'invariants'
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
import orbichi.orbifold as orbifold
import orbichi.sectors as sectors

log = logging.getLogger('orbichi.invariants')

class error(ValueError): pass
class HasBoundary(error): pass
class NoBoundary(error): pass

ClosedIdentity = namedtuple('ClosedIdentity','sector_sum chi holds')
BoundaryIdentity = namedtuple('BoundaryIdentity','lhs rhs holds')
AppendixIdentity = namedtuple('AppendixIdentity','chi_roan sector_sum_plain holds')
InnerIdentity = namedtuple('InnerIdentity','chi_orb_inner chi_orb chi_orb_boundary holds')
OddRelation = namedtuple('OddRelation','lhs rhs holds')

def _sign_(d): return 1 if d % 2 == 0 else -1

def chi_underlying(L):
    """ :returns: Euler characteristic of the underlying complex """
    return simplicial.euler_characteristic(L.complex)

def chi_boundary(L):
    """ :returns: Euler characteristic of the boundary subcomplex """
    K = L.complex
    return sum(_sign_(K[sid].dim) for sid in L.boundary)

def _orb_sum_(L,keep):
    K = L.complex
    return sum((Fraction(_sign_(s.dim),L.group_of(s.id).order) for s in K if keep(s.id)),
               Fraction(0))

def chi_orb(L):
    """ :returns: orbifold Euler characteristic of L """
    return _orb_sum_(L,lambda sid:True)

def chi_orb_inner(L):
    """ :returns: orbifold Euler characteristic of the simplices off the boundary """
    return _orb_sum_(L,lambda sid:sid not in L.boundary)

def chi_orb_boundary(L):
    """ :returns: orbifold Euler characteristic of the boundary simplices """
    return _orb_sum_(L,lambda sid:sid in L.boundary)

def chi_roan(L):
    """ :returns: stringy Euler number, simplices weighted by their class counts """
    return sum(_sign_(s.dim)*len(L.group_of(s.id).classes) for s in L.complex)

def chi_dixon(a):
    """
     :param a: a regular GroupAction
     :returns: the orbifold Euler number of the global quotient, computed on
      the fixed subcomplexes of commuting pairs
    """
    orbifold.check_regular(a)
    G,K = a.group,a.complex
    total = 0
    for g in range(G.order):
        for h in range(G.order):
            if G.mul(g,h) != G.mul(h,g): continue
            fixed = simplicial.subcomplex(K,orbifold.fixed_ids(a,(g,h)))
            total += simplicial.euler_characteristic(fixed)
    return Fraction(total,G.order)

#### IDENTITIES

def verify_closed_identity(L,dec=None):
    """
     the orbifold Euler characteristics of the sectors sum to the Euler
     characteristic of the underlying space
     :param L: a closed LabeledComplex
     :param dec: optional SectorDecomposition of L
     :returns: ClosedIdentity
    """
    if not L.is_closed: raise HasBoundary("{0} has a boundary".format(L.name))
    dec = dec or sectors.decompose(L)
    lhs = sum((sectors.sector_euler(dec,t,'orbifold') for t in dec),Fraction(0))
    chi = chi_underlying(L)
    return ClosedIdentity(lhs,chi,lhs == chi)

def verify_boundary_identity(L,dec=None):
    """
     the inner sector sums less half the boundary sector sums equal
     (chi - chi_boundary) - chi_boundary/2 on the underlying complex
     :param L: a LabeledComplex with boundary
     :param dec: optional SectorDecomposition of L
     :returns: BoundaryIdentity
    """
    if L.is_closed: raise NoBoundary("{0} has no boundary".format(L.name))
    dec = dec or sectors.decompose(L)
    lhs = Fraction(0)
    for t in dec:
        lhs += sectors.sector_euler(dec,t,'inner_orbifold')
        lhs -= sectors.sector_euler(dec,t,'boundary_orbifold') / 2
    chi,bd = chi_underlying(L),chi_boundary(L)
    rhs = (chi - bd) - Fraction(bd,2)
    return BoundaryIdentity(lhs,rhs,lhs == rhs)

def verify_appendix_identity(L,dec=None):
    """
     the stringy Euler number equals the sum of the plain Euler characteristics
     of the sectors
     :returns: AppendixIdentity
    """
    dec = dec or sectors.decompose(L)
    plain = sum(sectors.sector_euler(dec,t,'underlying') for t in dec)
    roan = chi_roan(L)
    return AppendixIdentity(roan,plain,roan == plain)

def verify_inner_identity(L):
    """ inner orbifold Euler characteristic = chi_orb(L) - chi_orb(boundary of L) """
    inner,total = chi_orb_inner(L),chi_orb(L)
    bd = chi_orb(orbifold.boundary_part(L)) if L.boundary else Fraction(0)
    return InnerIdentity(inner,total,bd,inner == total - bd)

def odd_relation(L):
    """
     chi_orb(L) against half of chi_orb(boundary of L), which agree on odd
     dimensional orbifolds with boundary. Informational only: an arbitrary
     labeled complex need not be a manifold-like orbifold
    """
    lhs,rhs = chi_orb(L),chi_orb_boundary(L) / 2
    return OddRelation(lhs,rhs,lhs == rhs)

#### COHOMOLOGY

def orbifold_betti_table(L,shift_data,dec=None):
    """
     :param L: the LabeledComplex
     :param shift_data: shift data covering every sector (raw or validated)
     :param dec: optional SectorDecomposition of L
     :returns: dict degree (Fraction) -> dimension, nonzero dimensions only,
      in increasing degree
    """
    data = sectors.shift_data(shift_data,L)
    dec = dec or sectors.decompose(L)
    table = {}
    for t in dec:
        iota = sectors.degree_shift(L,data,t)
        for j,b in enumerate(sectors.sector_betti(dec,t)):
            if not b: continue
            d = 2*iota + j
            table[d] = table.get(d,0) + b
    return {d:table[d] for d in sorted(table)}

#### REPORT

class InvariantReport(dict):
    """
     a dict of every invariant of a labeled complex exposing the keys as
     attributes:
      name, dimension, chi_underlying, chi_boundary, chi_orb, chi_orb_inner,
      chi_orb_boundary, chi_roan, sector_count, sector_sum_orb,
      sector_sum_plain: numbers
      closed_identity: ClosedIdentity or None (complexes with boundary)
      boundary_identity: BoundaryIdentity or None (closed complexes)
      appendix_identity: AppendixIdentity
      inner_identity: InnerIdentity
      odd_relation: OddRelation or None (only odd dimension with boundary)
      orbifold_betti: dict degree -> dimension or None (no shift data)
    """
    def __new__(cls,d=None):
        return super(InvariantReport,cls).__new__(cls,dict({} if d is None else d))

    def __getattr__(self,key):
        try:
            return self[key]
        except KeyError:
            raise AttributeError(key)

def report(L,shift_data=None):
    """
     :param L: a validated LabeledComplex
     :param shift_data: shift data (defaults to the shift data L carries)
     :returns: InvariantReport
    """
    dec = sectors.decompose(L)
    if shift_data is None: shift_data = L.shift_data
    r = InvariantReport()
    r['name'] = L.name
    r['dimension'] = L.dimension
    r['chi_underlying'] = chi_underlying(L)
    r['chi_boundary'] = chi_boundary(L)
    r['chi_orb'] = chi_orb(L)
    r['chi_orb_inner'] = chi_orb_inner(L)
    r['chi_orb_boundary'] = chi_orb_boundary(L)
    r['chi_roan'] = chi_roan(L)
    r['sector_count'] = len(dec)
    r['sector_sum_orb'] = sum((sectors.sector_euler(dec,t,'orbifold') for t in dec),Fraction(0))
    r['sector_sum_plain'] = sum(sectors.sector_euler(dec,t,'underlying') for t in dec)
    r['closed_identity'] = verify_closed_identity(L,dec) if L.is_closed else None
    r['boundary_identity'] = None if L.is_closed else verify_boundary_identity(L,dec)
    r['appendix_identity'] = verify_appendix_identity(L,dec)
    r['inner_identity'] = verify_inner_identity(L)
    r['odd_relation'] = odd_relation(L) if L.dimension % 2 and not L.is_closed else None
    r['orbifold_betti'] = None
    if shift_data is not None: r['orbifold_betti'] = orbifold_betti_table(L,shift_data,dec)
    if not report_holds(r): log.warning("%s: an identity failed",L.name)
    return r

def report_holds(r):
    """ :returns: True if every identity of the report holds (odd_relation aside) """
    checks = ('closed_identity','boundary_identity','appendix_identity','inner_identity')
    return all(r[k].holds for k in checks if r.get(k) is not None)
