""" sector decompositions, sector Euler characteristics and degree shifts """

from fractions import Fraction
from collections import defaultdict
import pytest
import orbichi.groups as groups
import orbichi.simplicial as simplicial
import orbichi.orbifold as orbifold
import orbichi.gallery as gallery
import orbichi.sectors as sectors
from orbichi.sectors import SectorAtom
from orbichi.orbifold import TRIVIAL

def test_point_with_dihedral_group():
    dec = sectors.decompose(gallery.point_with_group(groups.dihedral(3)))
    assert len(dec) == 3
    assert [t.centralizer_orders for t in dec] == [(6,),(3,),(2,)]
    assert sum(sectors.sector_euler(dec,t) for t in dec) == 1
    assert all(sectors.sector_betti(dec,t) == (1,) for t in dec)

def test_teardrop_sectors():
    L = gallery.teardrop(5)
    dec = sectors.decompose(L)
    assert len(dec) == 5
    assert dec.nontwisted is dec[0]
    assert len(dec.nontwisted) == len(L.complex)
    assert sectors.sector_betti(dec,0) == (1,0,1)
    for t in dec.sectors[1:]:
        assert t.atoms == (SectorAtom(4,t.index),)
        assert t.dimension == 0
        assert t.codimension == 2
        assert sectors.sector_betti(dec,t) == (1,)

def test_teardrop_euler():
    dec = sectors.decompose(gallery.teardrop(3))
    assert sectors.sector_euler(dec,0,'orbifold') == Fraction(4,3)
    assert sectors.sector_euler(dec,0,'underlying') == 2
    assert [sectors.sector_euler(dec,t,'orbifold') for t in (1,2)] == [Fraction(1,3)]*2
    with pytest.raises(sectors.error):
        sectors.sector_euler(dec,0,'stringy')

def test_trivially_labeled_modes_agree():
    K = simplicial.complex_from_facets(gallery.OCTAHEDRON)
    dec = sectors.decompose(orbifold.trivially_labeled(K))
    assert len(dec) == 1
    assert sectors.sector_euler(dec,0,'orbifold') == sectors.sector_euler(dec,0,'underlying') == 2

@pytest.mark.parametrize('k,l',[(2,3),(3,4),(2,5)])
def test_solid_hollow_football(k,l):
    L = gallery.solid_hollow_football(k,l)
    dec = sectors.decompose(L)
    assert len(dec) == k + l - 1
    for t in dec.sectors[1:]:
        # each twisted sector is one arc joining the two boundary spheres
        assert t.dimension == 1
        assert t.codimension == 2
        assert t.connected_components == 1
        assert sectors.sector_betti(dec,t) == (1,0)
        assert len(t.boundary) == 2

def test_figure8_sectors():
    L = gallery.figure8_disk()
    K = L.complex
    dec = sectors.decompose(L)
    assert len(dec) == 3
    hub = K.find([12])
    D6 = L.group_of(hub)
    s_class,r_class = D6.class_index(3),D6.class_index(1)
    order2 = dec.sector_of(SectorAtom(hub,s_class))
    order3 = dec.sector_of(SectorAtom(hub,r_class))
    assert order2 is not order3

    # direct enumeration of the cells of each sector
    cells = defaultdict(lambda:[0,0])
    for sid,c in [(sid,c) for sid in K.ids() if L.labels[sid] in ('Z2','Z3','D6')
                  for c in range(1,len(L.group_of(sid).classes))]:
        gid = L.labels[sid]
        key = gid if gid != 'D6' else ('Z2' if c == s_class else 'Z3')
        cells[key][K[sid].dim] += 1
    assert cells['Z2'] == [3,3]
    assert cells['Z3'] == [5,6]
    assert order2.complex.counts() == cells['Z2']
    assert order3.complex.counts() == cells['Z3']
    # a circle and two circles through the hub
    assert sectors.sector_betti(dec,order2) == (1,1)
    assert sectors.sector_betti(dec,order3) == (1,2)

def test_antipodal_ball_sectors():
    L = gallery.antipodal_ball()
    dec = sectors.decompose(L)
    assert len(dec) == 2
    assert [len(t) for t in dec] == [len(L.complex),1]
    # the only fixed point of the antipodal map is the cone apex
    (apex,c), = dec[1].atoms
    assert (L.complex[apex].dim,c) == (0,1)
    assert L.group_of(apex).order == 2
    assert apex not in L.boundary
    assert dec[1].dimension == 0
    assert dec[1].centralizer_orders == (2,)
    assert dec[1].boundary == frozenset()

def test_sliced_cone_sectors():
    L = gallery.sliced_cone(3)
    apex = L.complex.find([0])
    dec = sectors.decompose(L)
    assert len(dec) == 3
    for t in dec.sectors[1:]:
        assert t.atoms == (SectorAtom(apex,t.index),)
        # a cone point on the boundary gives boundary twisted sectors
        assert t.boundary == frozenset([0])
        assert sectors.sector_euler(dec,t,'boundary_orbifold') == Fraction(1,3)
        assert sectors.sector_euler(dec,t,'inner_orbifold') == 0
    assert sectors.sector_euler(dec,0,'inner_orbifold') == 1
    assert sectors.sector_euler(dec,0,'boundary_orbifold') == Fraction(-2,3)

def test_boundary_atoms_match_boundary_decomposition():
    for L in (gallery.solid_hollow_football(2,3),gallery.figure8_disk(),gallery.solid_football(4)):
        dec = sectors.decompose(L)
        bdec = sectors.decompose(orbifold.boundary_part(L))
        assert dec.boundary_atoms == frozenset(bdec.atoms)

def test_nontwisted_is_underlying():
    L = gallery.figure8_disk()
    t = sectors.decompose(L).nontwisted
    K = L.complex
    assert {a.simplex for a in t.atoms} == set(K.ids())
    assert all(a.cclass == 0 for a in t.atoms)
    for a in t.atoms:
        i = t.cell(a)
        assert t.complex[i].dim == K[a.simplex].dim
        assert [t.atoms[f].simplex for f in t.complex.facets(i)] == list(K.facets(a.simplex))

def test_nontwisted_single_over_disconnected():
    K = simplicial.complex_from_facets([(0,1,2),(3,4,5)])
    dec = sectors.decompose(orbifold.trivially_labeled(K))
    assert len(dec) == 1
    assert dec.nontwisted.connected_components == 2

def _check_boundary_squared_(C):
    for s in C:
        acc = defaultdict(int)
        for f,c in C.boundary(s.id).items():
            for g,d in C.boundary(f).items(): acc[g] += c*d
        assert not any(acc.values())

def test_counting_identities(rng):
    for i in range(100):
        L = gallery.random_labeled(rng,closed=i % 2 == 0)
        dec = sectors.decompose(L)
        K = L.complex
        plain = sum(sectors.sector_euler(dec,t,'underlying') for t in dec)
        assert plain == sum((1 if s.dim % 2 == 0 else -1)*len(L.group_of(s.id).classes) for s in K)
        orb = sum(sectors.sector_euler(dec,t,'orbifold') for t in dec)
        assert orb == simplicial.euler_characteristic(K)
        assert len(dec.atoms) == sum(len(L.group_of(sid).classes) for sid in K.ids())
        for t in dec: _check_boundary_squared_(t.complex)

#### DEGREE SHIFTS

@pytest.mark.parametrize('k',[2,3,5])
def test_teardrop_shifts(k):
    L = gallery.teardrop(k)
    data = sectors.shift_data(L.shift_data,L)
    dec = sectors.decompose(L)
    assert sectors.degree_shift(L,data,dec.nontwisted) == 0
    for t in dec.sectors[1:]:
        iota = sectors.degree_shift(L,data,t)
        assert iota == Fraction(t.index,k)
        assert 2*iota < t.codimension
    assert sectors.degree_shift(L,data,1,dec) == Fraction(1,k)

def _three_vertex_triangle_():
    """ a triangle whose edge (0,1) and its vertices carry distinct copies of Z3 """
    K = simplicial.complex_from_facets([(0,1,2)])
    Z3 = groups.cyclic(3)
    table = {'A':Z3,'B':Z3,'C':Z3,TRIVIAL:groups.trivial()}
    labels = {0:'A',1:'B',3:'C'}
    monos = {}
    for s in K:
        H = table[labels.get(s.id,TRIVIAL)]
        for pos,f in enumerate(s.facets):
            G = table[labels.get(f,TRIVIAL)]
            monos[(s.id,pos)] = groups.Monomorphism(H,G,tuple(range(H.order)))
    return orbifold.LabeledComplex(K,table,labels,monos)

def test_inconsistent_shift():
    L = _three_vertex_triangle_()
    assert orbifold.validate(L) == []
    dec = sectors.decompose(L)
    assert len(dec) == 3
    t = dec.sector_of(SectorAtom(0,1))
    assert SectorAtom(1,1) in t and SectorAtom(3,1) in t
    ok = sectors.shift_data({'A':{'1':[[1,3]]},'B':{'1':[[1,3]]}},L)
    assert sectors.degree_shift(L,ok,t) == Fraction(1,3)
    bad = sectors.shift_data({'A':{'1':[[1,3]]},'B':{'1':[[2,3]]}},L)
    with pytest.raises(sectors.InconsistentShift):
        sectors.degree_shift(L,bad,t)

def test_missing_shift():
    L = gallery.teardrop(3)
    dec = sectors.decompose(L)
    with pytest.raises(sectors.MissingShiftData):
        sectors.degree_shift(L,{},dec[1])

@pytest.mark.parametrize('raw',[{'Z9':{}},
                                {'Z3':[]},
                                {'Z3':{'7':[[0,1]]}},
                                {'Z3':{'1':[[1,3],[0,1]]}},
                                {'Z3':{'1':[[3,3]]}},
                                {'Z3':{'1':[[1,2]]}},
                                {'Z3':{'1':[['x',3]]}},
                                []])
def test_bad_shift_data(raw):
    with pytest.raises(sectors.BadShiftData):
        sectors.shift_data(raw,gallery.teardrop(3))

def test_shift_data_needs_even_dimension():
    with pytest.raises(sectors.BadShiftData):
        sectors.shift_data({},gallery.solid_football(3))

def test_shift_of():
    assert sectors.shift_of(((1,3),(2,3))) == 1
    assert sectors.shift_of(()) == 0
