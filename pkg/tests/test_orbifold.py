""" labeled complexes, validation, group actions and global quotients """

import pytest
import orbichi.groups as groups
import orbichi.simplicial as simplicial
import orbichi.orbifold as orbifold
import orbichi.gallery as gallery
import orbichi.invariants as invariants
from orbichi.orbifold import TRIVIAL

def labeled(K,table,labels,special=None,boundary=()):
    """ labels K, face monos are identities (or trivial) unless listed in special """
    table = dict(table)
    table[TRIVIAL] = groups.trivial()
    monos = {}
    for s in K:
        H = table[labels.get(s.id,TRIVIAL)]
        for pos,f in enumerate(s.facets):
            G = table[labels.get(f,TRIVIAL)]
            mp = (special or {}).get((s.id,pos))
            if mp is None: mp = (0,) if H.order == 1 else tuple(range(H.order))
            monos[(s.id,pos)] = groups.Monomorphism(H,G,mp)
    return orbifold.LabeledComplex(K,table,labels,monos,boundary)

def test_labels_default_trivial():
    L = gallery.teardrop(3)
    assert L.labels[0] == TRIVIAL
    assert L.group_of(4).order == 3
    assert L.used_groups() == [TRIVIAL,'Z3']
    assert L.is_closed
    assert L.dimension == 2

def test_valid_gallery():
    for name in ('teardrop','football','solid_football','solid_hollow_football',
                 'figure8_disk','antipodal_ball'):
        params = {'teardrop':{'k':3},'football':{'k':2,'l':5},'solid_football':{'k':3},
                  'solid_hollow_football':{'k':2,'l':3}}.get(name,{})
        assert orbifold.validate(gallery.example(name,**params)) == [],name

def test_unknown_group():
    K = simplicial.complex_from_facets([(0,1)])
    L = orbifold.LabeledComplex(K,{},{0:'Z9'},{})
    assert orbifold.validate(L) == [('label.0',"unknown group 'Z9'")]

def test_missing_mono():
    L = gallery.teardrop(2)
    monos = dict(L.face_monos)
    del monos[(6,0)]
    M = orbifold.LabeledComplex(L.complex,L.groups,L.labels,monos)
    assert ('face_mono.6.0','missing face_mono') in orbifold.validate(M)

def test_divisibility():
    K = simplicial.complex_from_facets([(0,1)])
    Z2,Z3 = groups.cyclic(2),groups.cyclic(3)
    monos = {(2,0):groups.Monomorphism(Z2,Z2,(0,1)),
             (2,1):groups.Monomorphism(Z2,Z3,(0,1))}
    L = orbifold.LabeledComplex(K,{'Z2':Z2,'Z3':Z3},{0:'Z3',1:'Z2',2:'Z2'},monos)
    err = orbifold.validate(L)
    assert ('face_mono.2.1','order of group does not divide facet group order') in err
    assert ('face_mono.2.1','face_mono source mismatch') not in err

def test_mono_mismatch():
    K = simplicial.complex_from_facets([(0,1)])
    Z2 = groups.cyclic(2)
    T = groups.trivial()
    # vertex 0 carries Z2 but the mono into it targets the trivial group
    monos = {(2,0):groups.Monomorphism(T,T,(0,)),(2,1):groups.Monomorphism(T,T,(0,))}
    L = orbifold.LabeledComplex(K,{'Z2':Z2},{0:'Z2'},monos)
    assert orbifold.validate(L) == [('face_mono.2.1','face_mono target mismatch')]
    monos[(2,2)] = monos[(2,0)]
    L = orbifold.LabeledComplex(K,{'Z2':Z2},{0:'Z2',1:TRIVIAL},monos)
    assert ('face_mono.2.2','face_mono for unknown facet') in orbifold.validate(L)

def test_boundary_checks():
    K = simplicial.complex_from_facets([(0,1,2)])
    L = orbifold.trivially_labeled(K,{3,6})
    err = orbifold.validate(L)
    assert ('boundary.3','boundary not face-closed') in err
    assert ('boundary.6','top simplex in boundary') in err
    L = orbifold.trivially_labeled(K,{9})
    assert orbifold.validate(L) == [('boundary.9','boundary simplex not in complex')]

def test_incoherent_class_maps():
    K = simplicial.complex_from_facets([(0,1,2)])
    Z3 = groups.cyclic(3)
    labels = {sid:'Z3' for sid in K.ids()}
    # edge (0,1) = id 3 reaches vertex 0 through position 1 by inversion
    L = labeled(K,{'Z3':Z3},labels,{(3,1):(0,2,1)})
    assert orbifold.validate(L) == [('face_mono.6','incoherent class maps into face 0')]
    assert orbifold.validate(labeled(K,{'Z3':Z3},labels)) == []

def test_restrict_and_boundary_part():
    L = gallery.solid_football(3)
    B = orbifold.boundary_part(L)
    assert B.is_closed
    assert B.dimension == 2
    assert B.complex.counts() == [6,12,8]
    assert orbifold.validate(B) == []
    assert B.labels[4] == 'Z3'
    R = orbifold.restrict(L,B.complex.ids())
    assert R.boundary == frozenset(sid for sid in B.complex.ids() if B.complex[sid].dim < 2)

def test_with_shift_data():
    L = gallery.teardrop(3)
    M = L.with_shift_data(None)
    assert M.shift_data is None
    assert M != L
    assert M.with_shift_data(L.shift_data) == L

def test_antipodal_octahedron():
    a = gallery.antipodal_octahedron()
    assert a.group.order == 2
    assert orbifold.is_regular(a)
    assert orbifold.fixed_ids(a,[1]) == set()
    assert orbifold.fixed_ids(a,[0]) == set(a.complex.ids())
    Q = orbifold.global_quotient(a)
    assert orbifold.validate(Q) == []
    assert Q.complex.counts() == [3,6,4]
    # the real projective plane
    assert simplicial.euler_characteristic(Q.complex) == 1
    assert simplicial.betti_numbers(Q.complex) == (1,0,0)
    assert Q.used_groups() == [TRIVIAL]

def test_rotated_suspension_quotient():
    a = gallery.rotated_suspension(3)
    assert a.group.order == 3
    assert orbifold.fixed_ids(a,[1]) == {0,1}
    Q = orbifold.global_quotient(a)
    assert orbifold.validate(Q) == []
    assert Q.complex.counts() == [3,3,2]
    assert sorted(Q.group_of(sid).order for sid in Q.complex.ids(0)) == [1,3,3]
    assert simplicial.betti_numbers(Q.complex) == (1,0,1)

def test_antipodal_ball_quotient():
    L = gallery.antipodal_ball()
    assert orbifold.validate(L) == []
    assert L.boundary
    assert [L.group_of(sid).order for sid in L.complex.ids() if L.group_of(sid).order > 1] == [2]
    assert invariants.chi_orb(orbifold.boundary_part(L)) == 1

def test_not_regular_and_subdivide():
    K = simplicial.complex_from_facets([(0,1)])
    a = orbifold.action_from_permutations(K,[(1,0)])
    assert not orbifold.is_regular(a)
    with pytest.raises(orbifold.NotRegular) as e:
        orbifold.global_quotient(a)
    assert (e.value.element,e.value.simplex) == (1,2)
    b = orbifold.subdivide(a)
    assert orbifold.is_regular(b)
    assert b.complex.counts() == [3,2]
    Q = orbifold.global_quotient(b)
    assert Q.complex.counts() == [2,1]
    assert sorted(Q.group_of(sid).order for sid in Q.complex.ids(0)) == [1,2]

def test_quotient_group_ids_are_consecutive():
    # the Klein four group reflecting a square: two kinds of edge midpoints
    # have distinct stabilizers of order 2
    K = simplicial.complex_from_facets([(0,1),(1,2),(2,3),(0,3)])
    a = orbifold.subdivide(orbifold.action_from_permutations(K,[(1,0,3,2),(3,2,1,0)]))
    Q = orbifold.global_quotient(a)
    assert orbifold.validate(Q) == []
    assert Q.complex.counts() == [3,2]
    assert sorted(set(Q.labels.values())) == [TRIVIAL,'G1','G2']
    assert gallery.antipodal_ball().used_groups() == [TRIVIAL,'G1']

def test_subdivide_keeps_boundary():
    a = gallery.antipodal_cone()
    b = orbifold.subdivide(a)
    assert orbifold.is_regular(b)
    bd = simplicial.subcomplex(b.complex,b.boundary)
    assert simplicial.euler_characteristic(bd) == 2
    assert simplicial.euler_characteristic(b.complex) == 1

def test_not_an_action():
    K = simplicial.complex_from_facets([(0,1),(1,2)])
    with pytest.raises(orbifold.NotAnAction):
        orbifold.action_from_permutations(K,[(0,2,1)])
    with pytest.raises(orbifold.NotAnAction):
        orbifold.group_action(groups.cyclic(2),K,[(0,1,2),(0,1,2),(0,1,2)])
    with pytest.raises(orbifold.NotAnAction):
        # boundary {vertex 0} is not invariant under the flip
        orbifold.action_from_permutations(K,[(2,1,0)],{0})

def test_trivial_action():
    K = simplicial.complex_from_facets(gallery.OCTAHEDRON)
    a = orbifold.trivial_action(K)
    Q = orbifold.global_quotient(a)
    assert Q.complex == K
