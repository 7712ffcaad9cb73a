#!/usr/bin/env python

""" orbfile.py: JSON orbifold files

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

An orbifold file is a JSON object
 {"name": str,
  "dimension": int,
  "groups": [{"id": str, "kind": "cyclic"|"dihedral", "order": int} or
             {"id": str, "kind": "table", "table": [[int]]}],
  "simplices": [{"id": int, "dim": int, "facets": [int], "group": str,
                 "signs": [int]}],
  "face_monos": [{"simplex": int, "facet_position": int, "map": [int]}],
  "boundary": [int],
  "shift_data": {group id: {element: [[m_i,m]]}}}
"group" defaults to the trivial group "1" (a reserved id), "signs" to all +1,
"boundary" to empty and "shift_data" to none. Dihedral orders are group
orders (2k). Face monomorphisms out of the trivial group may be omitted.

"""

__name__ = 'orbfile'
__license__ = 'GPL v3.0'
__version__ = '0.1.0'
__date__ = 'October 2026'
__author__ = 'orbichi developers'
__maintainer__ = 'orbichi developers'
__status__ = 'Development'

import json
import logging
import orbichi.groups as groups
import orbichi.simplicial as simplicial
import orbichi.orbifold as orbifold
import orbichi.sectors as sectors
from orbichi.orbifold import TRIVIAL

log = logging.getLogger('orbichi.orbfile')

class error(ValueError): pass

_TOP_ = ('name','dimension','groups','simplices','face_monos','boundary','shift_data')
_REQUIRED_ = ('dimension','groups','simplices')
_GROUP_ = ('id','kind','order','table')
_SIMPLEX_ = ('id','dim','facets','group','signs')
_MONO_ = ('simplex','facet_position','map')

def _keys_(obj,allowed,loc):
    if not isinstance(obj,dict): raise error("{0}: expected an object".format(loc))
    bad = sorted(set(obj) - set(allowed))
    if bad: raise error("{0}: unknown key '{1}'".format(loc,bad[0]))

def _int_(x): return isinstance(x,int) and not isinstance(x,bool)

def _list_(doc,key,loc):
    v = doc.get(key,[])
    if not isinstance(v,list): raise error("{0}: '{1}' must be a list".format(loc,key))
    return v

def _group_(g,loc):
    _keys_(g,_GROUP_,loc)
    kind = g.get('kind')
    try:
        if kind == 'cyclic':
            return groups.cyclic(int(g['order']))
        if kind == 'dihedral':
            n = int(g['order'])
            if n < 2 or n % 2: raise error("{0}: dihedral order must be even".format(loc))
            return groups.dihedral(n // 2)
        if kind == 'table':
            return groups.group_from_table(g['table'],str(g['id']))
    except KeyError as e:
        raise error("{0}: missing '{1}'".format(loc,e.args[0]))
    except (TypeError,ValueError) as e:
        raise error("{0}: {1}".format(loc,e))
    raise error("{0}: unknown kind '{1}'".format(loc,kind))

def parse(doc,check=True):
    """
     :param doc: the decoded JSON document
     :param check: validate the labeled complex (orbifold.validate)
     :returns: LabeledComplex
    """
    _keys_(doc,_TOP_,'document')
    for key in _REQUIRED_:
        if key not in doc: raise error("document: missing '{0}'".format(key))

    table = {}
    for i,g in enumerate(_list_(doc,'groups','document')):
        loc = 'groups.{0}'.format(i)
        gid = g.get('id') if isinstance(g,dict) else None
        if not isinstance(gid,str): raise error("{0}: id must be a string".format(loc))
        if gid == TRIVIAL: raise error("{0}: id '{1}' is reserved".format(loc,TRIVIAL))
        if gid in table: raise error("{0}: duplicate id '{1}'".format(loc,gid))
        table[gid] = _group_(g,loc)
    table[TRIVIAL] = groups.trivial()

    entries,labels = [],{}
    for i,s in enumerate(_list_(doc,'simplices','document')):
        loc = 'simplices.{0}'.format(i)
        _keys_(s,_SIMPLEX_,loc)
        sid,dim,gid = s.get('id'),s.get('dim'),s.get('group',TRIVIAL)
        if not _int_(sid) or not _int_(dim):
            raise error("{0}: id and dim must be integers".format(loc))
        if not isinstance(gid,str): raise error("{0}: group must be a string".format(loc))
        if gid not in table: raise error("{0}: unknown group '{1}'".format(loc,gid))
        entries.append((sid,dim,s.get('facets',[]),s.get('signs')))
        labels[sid] = gid
    try:
        K = simplicial.complex_from_simplices(entries)
    except (simplicial.error,TypeError,ValueError) as e:
        raise error("simplices: {0}".format(e))
    if doc['dimension'] != K.dim:
        raise error("document: dimension {0} but the simplices have {1}".format(doc['dimension'],K.dim))

    monos = {}
    for i,m in enumerate(_list_(doc,'face_monos','document')):
        loc = 'face_monos.{0}'.format(i)
        _keys_(m,_MONO_,loc)
        try:
            sid,pos = int(m['simplex']),int(m['facet_position'])
            if pos < 0: raise IndexError(pos)
            f = K.facets(sid)[pos]
            mono = groups.monomorphism(table[labels[sid]],table[labels[f]],m['map'])
        except KeyError as e:
            raise error("{0}: unknown simplex or missing key {1}".format(loc,e))
        except IndexError:
            raise error("{0}: no facet at that position".format(loc))
        except (groups.error,TypeError,ValueError) as e:
            raise error("{0}: {1}".format(loc,e))
        if (sid,pos) in monos: raise error("{0}: duplicate face_mono".format(loc))
        monos[(sid,pos)] = mono
    for s in K:
        if labels[s.id] != TRIVIAL: continue
        for pos,f in enumerate(s.facets):
            if (s.id,pos) not in monos:
                monos[(s.id,pos)] = groups.trivial_monomorphism(table[TRIVIAL],table[labels[f]])

    boundary = _list_(doc,'boundary','document')
    if not all(_int_(sid) for sid in boundary):
        raise error("document: boundary must list simplex ids")
    L = orbifold.LabeledComplex(K,table,labels,monos,boundary,None,doc.get('name',''))
    if check:
        err = orbifold.validate(L)
        if err: raise error("{0}: {1}".format(*err[0]))
    if doc.get('shift_data') is not None:
        try:
            L = L.with_shift_data(sectors.shift_data(doc['shift_data'],L))
        except sectors.error as e:
            raise error("shift_data: {0}".format(e))
    log.debug("parsed %s: %d simplices",L.name,len(K))
    return L

def loads(text,check=True):
    """ :returns: LabeledComplex from JSON text """
    try:
        doc = json.loads(text)
    except ValueError as e:
        raise error("malformed JSON: {0}".format(e))
    return parse(doc,check)

def load(path,check=True):
    """ :returns: LabeledComplex from the JSON file at path """
    try:
        with open(path) as fin: text = fin.read()
    except (IOError,OSError) as e:
        raise error("cannot read {0}: {1}".format(path,e))
    return loads(text,check)

def _group_doc_(gid,G):
    if G == groups.cyclic(G.order): return {'id':gid,'kind':'cyclic','order':G.order}
    if G.order % 2 == 0 and G == groups.dihedral(G.order // 2):
        return {'id':gid,'kind':'dihedral','order':G.order}
    return {'id':gid,'kind':'table','table':[list(row) for row in G.table]}

def dump(L):
    """ :returns: the JSON document (a dict) of the LabeledComplex L """
    K = L.complex
    doc = {'name':L.name,'dimension':K.dim}
    doc['groups'] = [_group_doc_(gid,L.groups[gid]) for gid in L.used_groups() if gid != TRIVIAL]
    ss = []
    for sid in K.ids():
        s = K[sid]
        e = {'id':sid,'dim':s.dim,'facets':list(s.facets)}
        if L.labels[sid] != TRIVIAL: e['group'] = L.labels[sid]
        if any(x != 1 for x in s.signs): e['signs'] = list(s.signs)
        ss.append(e)
    doc['simplices'] = ss
    doc['face_monos'] = [{'simplex':sid,'facet_position':pos,'map':list(m.map)}
                         for (sid,pos),m in sorted(L.face_monos.items())
                         if L.labels[sid] != TRIVIAL]
    doc['boundary'] = sorted(L.boundary)
    if L.shift_data is not None:
        doc['shift_data'] = {gid:{str(g):[list(p) for p in pairs] for g,pairs in sorted(es.items())}
                             for gid,es in sorted(L.shift_data.items())}
    return doc

def dumps(L,indent=1):
    """ :returns: JSON text of the LabeledComplex L """
    return json.dumps(dump(L),indent=indent)

def save(L,path):
    """ writes L to path """
    with open(path,'w') as fout: fout.write(dumps(L) + '\n')
