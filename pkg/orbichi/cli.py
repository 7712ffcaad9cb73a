#!/usr/bin/env python

""" cli.py: the orbichi command line

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

 orbichi chi FILE              invariant report
 orbichi sectors FILE          sector listing
 orbichi betti FILE            Betti numbers (and orbifold Betti table)
 orbichi validate FILE         labeled complex diagnostics
 orbichi index --field EXPR    orbifold index of a planar field
 orbichi example NAME          write a gallery orbifold file
 orbichi verify                identities on seeded random complexes

Reports are JSON on standard output, rationals as "p/q" strings. Exit codes:
0 ok, 1 input error, 2 an identity failed, 3 the field is not equivariant.

"""

__name__ = 'cli'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import sys
import json
import random
import logging
import argparse
from fractions import Fraction
import orbichi
import orbichi.groups as groups
import orbichi.simplicial as simplicial
import orbichi.orbifold as orbifold
import orbichi.gallery as gallery
import orbichi.sectors as sectors
import orbichi.invariants as invariants
import orbichi.charts as charts
import orbichi.orbfile as orbfile
import orbichi._expr as expr

log = logging.getLogger('orbichi.cli')

# exit codes
EXIT_OK = 0
EXIT_INPUT = 1
EXIT_IDENTITY = 2
EXIT_NOT_EQUIVARIANT = 3

INPUT_ERRORS = (orbfile.error,gallery.error,sectors.error,expr.error,
                groups.error,simplicial.error,orbifold.error,charts.error)

def jsonable(x):
    """ :returns: x with rationals as 'p/q' strings and records as objects """
    if isinstance(x,bool) or x is None or isinstance(x,str): return x
    if isinstance(x,Fraction): return simplicial.ratstr(x)
    if isinstance(x,int): return x
    if hasattr(x,'_asdict'): return jsonable(x._asdict())
    if isinstance(x,dict):
        return {(simplicial.ratstr(k) if isinstance(k,Fraction) else str(k)):jsonable(v)
                for k,v in x.items()}
    if isinstance(x,(list,tuple)): return [jsonable(v) for v in x]
    return x

def parse_field(text):
    """ :returns: PlanarField of the complex expression text """
    return charts.complex_field(expr.parse(text),text)

def _load_(path,check=True):
    return orbfile.load(path,check)

#### COMMANDS

def cmd_chi(args):
    """ full invariant report """
    L = _load_(args.file)
    r = invariants.report(L)
    return r,EXIT_OK if invariants.report_holds(r) else EXIT_IDENTITY

def cmd_sectors(args):
    """ one entry per sector """
    L = _load_(args.file)
    dec = sectors.decompose(L)
    out = []
    for t in dec:
        e = {'index':t.index,
             'nontwisted':t.is_nontwisted,
             'atoms':len(t),
             'dimension':t.dimension,
             'codimension':t.codimension,
             'centralizer_orders':list(t.centralizer_orders),
             'euler':{mode:sectors.sector_euler(dec,t,mode) for mode in sectors.MODES},
             'betti':list(sectors.sector_betti(dec,t)),
             'connected_components':t.connected_components}
        if L.shift_data is not None:
            e['degree_shift'] = sectors.degree_shift(L,L.shift_data,t)
        out.append(e)
    return {'name':L.name,'sector_count':len(dec),'sectors':out},EXIT_OK

def cmd_betti(args):
    """ Betti numbers of the underlying complex, each sector and the orbifold table """
    L = _load_(args.file)
    dec = sectors.decompose(L)
    out = {'name':L.name,
           'underlying':list(simplicial.betti_numbers(L.complex)),
           'sectors':[list(sectors.sector_betti(dec,t)) for t in dec],
           'orbifold_betti':None}
    if L.shift_data is not None:
        out['orbifold_betti'] = invariants.orbifold_betti_table(L,L.shift_data,dec)
    return out,EXIT_OK

def cmd_validate(args):
    """ diagnostics of a file, exit 1 when there are any """
    L = _load_(args.file,check=False)
    err = orbifold.validate(L)
    out = {'name':L.name,'valid':not err,
           'errors':[{'location':loc,'message':msg} for loc,msg in err]}
    return out,EXIT_OK if not err else EXIT_INPUT

def cmd_index(args):
    """ equivariance, winding and orbifold index of a planar field """
    if args.order < 1: raise gallery.BadParams("order must be >= 1")
    f = parse_field(args.field)
    c = charts.rotation_chart(args.order)
    out = {'field':args.field,'order':args.order,'radius':args.radius}
    out['equivariant'] = charts.equivariance_check(f,c,tol=args.tol)
    if not out['equivariant']: return out,EXIT_NOT_EQUIVARIANT
    out['winding'] = charts.winding_index(f,args.radius,args.samples,args.tol)
    out['index'] = Fraction(out['winding'],args.order)
    return out,EXIT_OK

def _group_arg_(text):
    """ 'trivial', 'cyclic:K' or 'dihedral:N' (N the group order) """
    kind,_,n = text.partition(':')
    try:
        if kind == 'trivial': return groups.trivial()
        if kind == 'cyclic': return groups.cyclic(int(n))
        if kind == 'dihedral' and int(n) % 2 == 0: return groups.dihedral(int(n) // 2)
    except (groups.error,ValueError):
        pass
    raise gallery.BadParams("bad group '{0}'".format(text))

def cmd_example(args):
    """ writes (or prints) a gallery orbifold file """
    params = {}
    if args.k is not None: params['k'] = args.k
    if args.l is not None: params['l'] = args.l
    if args.group is not None: params['group'] = _group_arg_(args.group)
    L = gallery.example(args.name,**params)
    doc = orbfile.dump(L)
    if args.out:
        orbfile.save(L,args.out)
        log.info("wrote %s to %s",args.name,args.out)
        return {'name':L.name,'out':args.out},EXIT_OK
    return doc,EXIT_OK

def cmd_verify(args):
    """ closed, boundary & appendix identities on seeded random complexes """
    rng = random.Random(args.seed)
    failures = []
    for i in range(args.count):
        closed = i % 2 == 0
        L = gallery.random_labeled(rng,closed)
        dec = sectors.decompose(L)
        checks = [invariants.verify_appendix_identity(L,dec)]
        if closed: checks.append(invariants.verify_closed_identity(L,dec))
        else: checks.append(invariants.verify_boundary_identity(L,dec))
        for c in checks:
            if not c.holds: failures.append({'sample':i,'check':type(c).__name__,'values':c})
    out = {'seed':args.seed,'count':args.count,'failures':failures}
    return out,EXIT_OK if not failures else EXIT_IDENTITY

#### ARGUMENTS

def build_parser():
    p = argparse.ArgumentParser(prog='orbichi',description="Euler characteristics of orbifolds")
    p.add_argument('-v','--verbose',action='count',default=0,help="-v info, -vv debug")
    p.add_argument('--version',action='version',version=orbichi.version)
    sub = p.add_subparsers(dest='command')
    sub.required = True

    for name,fn,hlp in (('chi',cmd_chi,"invariant report"),
                        ('sectors',cmd_sectors,"sector listing"),
                        ('betti',cmd_betti,"Betti numbers"),
                        ('validate',cmd_validate,"check a file")):
        s = sub.add_parser(name,help=hlp)
        s.add_argument('file',help="orbifold JSON file")
        s.set_defaults(func=fn)

    s = sub.add_parser('index',help="orbifold index of a planar field")
    s.add_argument('--field',required=True,help="expression in z and conj(z)")
    s.add_argument('--order',type=int,default=1,help="order of the rotation group")
    s.add_argument('--radius',type=float,default=1.0)
    s.add_argument('--samples',type=int,default=charts.WINDING_START)
    s.add_argument('--tol',type=float,default=charts.TOLERANCE)
    s.set_defaults(func=cmd_index)

    s = sub.add_parser('example',help="write a gallery orbifold")
    s.add_argument('name',help=', '.join(sorted(gallery.EXAMPLES)))
    s.add_argument('--k',type=int)
    s.add_argument('--l',type=int)
    s.add_argument('--group',help="trivial, cyclic:K or dihedral:N")
    s.add_argument('--out',help="output path (default standard output)")
    s.set_defaults(func=cmd_example)

    s = sub.add_parser('verify',help="identities on random labeled complexes")
    s.add_argument('--seed',type=int,default=0)
    s.add_argument('--count',type=int,default=100)
    s.set_defaults(func=cmd_verify)
    return p

def _configure_logging_(verbose):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level,stream=sys.stderr,
                        format="%(name)s %(levelname)s: %(message)s")

def main(argv=None):
    """ :returns: the exit code """
    args = build_parser().parse_args(argv)
    _configure_logging_(args.verbose)
    try:
        payload,code = args.func(args)
    except charts.NotEquivariant as e:
        payload,code = {'error':str(e)},EXIT_NOT_EQUIVARIANT
    except INPUT_ERRORS as e:
        log.error("%s",e)
        payload,code = {'error':str(e)},EXIT_INPUT
    sys.stdout.write(json.dumps(jsonable(payload),indent=2) + '\n')
    return code
