""" command line entry points """

import json
import pytest
import orbichi.gallery as gallery
import orbichi.orbfile as orbfile
import orbichi.simplicial as simplicial
import orbichi.orbifold as orbifold
import orbichi.cli as cli

def run(capsys,*argv):
    code = cli.main(list(argv))
    return json.loads(capsys.readouterr().out),code

def write(tmp_path,L,name='in.json'):
    path = str(tmp_path / name)
    orbfile.save(L,path)
    return path

def test_chi_teardrop(capsys,tmp_path):
    out,code = run(capsys,'chi',write(tmp_path,gallery.teardrop(3)))
    assert code == cli.EXIT_OK
    assert out['chi_orb'] == '4/3'
    assert out['sector_sum_orb'] == '2/1'
    assert out['closed_identity']['holds'] is True
    assert out['boundary_identity'] is None
    assert out['sector_count'] == 3

def test_chi_trivially_labeled(capsys,tmp_path):
    K = simplicial.complex_from_facets(gallery.OCTAHEDRON)
    out,code = run(capsys,'chi',write(tmp_path,orbifold.trivially_labeled(K,name='octahedron')))
    assert code == cli.EXIT_OK
    assert out['chi_orb'] == '2/1'
    assert out['name'] == 'octahedron'

def test_chi_with_boundary(capsys,tmp_path):
    out,code = run(capsys,'chi',write(tmp_path,gallery.solid_football(3)))
    assert code == cli.EXIT_OK
    assert out['chi_orb_inner'] == '-1/3'
    assert out['boundary_identity']['holds'] is True
    assert out['odd_relation']['holds'] is True

@pytest.mark.parametrize('L,count',[(gallery.teardrop(5),5),
                                    (gallery.solid_hollow_football(2,3),4),
                                    (gallery.figure8_disk(),3)])
def test_sectors(capsys,tmp_path,L,count):
    out,code = run(capsys,'sectors',write(tmp_path,L))
    assert code == cli.EXIT_OK
    assert out['sector_count'] == count == len(out['sectors'])
    assert out['sectors'][0]['nontwisted'] is True
    assert set(out['sectors'][0]['euler']) == {'underlying','orbifold','inner_orbifold',
                                               'boundary_orbifold'}

def test_sectors_degree_shifts(capsys,tmp_path):
    out,_ = run(capsys,'sectors',write(tmp_path,gallery.teardrop(3)))
    assert [t['degree_shift'] for t in out['sectors']] == ['0/1','1/3','2/3']

def test_betti_teardrop(capsys,tmp_path):
    out,code = run(capsys,'betti',write(tmp_path,gallery.teardrop(3)))
    assert code == cli.EXIT_OK
    assert out['underlying'] == [1,0,1]
    assert out['sectors'] == [[1,0,1],[1],[1]]
    assert out['orbifold_betti'] == {'0/1':1,'2/3':1,'4/3':1,'2/1':1}

def test_validate(capsys,tmp_path):
    out,code = run(capsys,'validate',write(tmp_path,gallery.figure8_disk()))
    assert (out['valid'],out['errors'],code) == (True,[],cli.EXIT_OK)
    doc = orbfile.dump(gallery.solid_football(2))
    doc['face_monos'] = doc['face_monos'][1:]
    path = tmp_path / 'broken.json'
    path.write_text(json.dumps(doc))
    out,code = run(capsys,'validate',str(path))
    assert code == cli.EXIT_INPUT
    assert out['valid'] is False
    assert any(e['message'] == 'missing face_mono' for e in out['errors'])

def test_malformed_file(capsys,tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"dimension": ')
    out,code = run(capsys,'chi',str(path))
    assert code == cli.EXIT_INPUT
    assert 'malformed JSON' in out['error']

def test_mistyped_simplex(capsys,tmp_path):
    doc = orbfile.dump(gallery.teardrop(3))
    doc['simplices'][4]['group'] = ['Z3']
    path = tmp_path / 'typed.json'
    path.write_text(json.dumps(doc))
    out,code = run(capsys,'chi',str(path))
    assert code == cli.EXIT_INPUT
    assert 'group must be a string' in out['error']

@pytest.mark.parametrize('field,order,index',[('z','3','1/3'),('z^2','1','2/1'),
                                              ('z^4','3','4/3')])
def test_index(capsys,field,order,index):
    out,code = run(capsys,'index','--field',field,'--order',order)
    assert code == cli.EXIT_OK
    assert out['equivariant'] is True
    assert out['index'] == index

def test_index_not_equivariant(capsys):
    out,code = run(capsys,'index','--field','conj(z)','--order','3')
    assert code == cli.EXIT_NOT_EQUIVARIANT
    assert out['equivariant'] is False
    assert 'index' not in out

@pytest.mark.parametrize('argv',[('--field','z^^'),('--field','z - 1'),
                                 ('--field','z','--order','0'),
                                 ('--field','z','--order','100000')])
def test_index_bad_input(capsys,argv):
    out,code = run(capsys,'index',*argv)
    assert code == cli.EXIT_INPUT
    assert 'error' in out

def test_example_to_stdout(capsys):
    out,code = run(capsys,'example','figure8_disk')
    assert code == cli.EXIT_OK
    assert {'id':'D6','kind':'dihedral','order':6} in out['groups']
    out,_ = run(capsys,'example','antipodal_ball')
    assert out['boundary']
    assert [g['order'] for g in out['groups']] == [2]

def test_example_to_file(capsys,tmp_path):
    path = str(tmp_path / 'point.json')
    out,code = run(capsys,'example','point_with_group','--group','dihedral:6','--out',path)
    assert code == cli.EXIT_OK
    assert out['out'] == path
    out,_ = run(capsys,'sectors',path)
    assert out['sector_count'] == 3

@pytest.mark.parametrize('argv',[('nope',),('teardrop',),('teardrop','--k','0'),
                                 ('point_with_group','--group','dihedral:5'),
                                 ('point_with_group','--group','free:2')])
def test_example_bad_input(capsys,argv):
    out,code = run(capsys,'example',*argv)
    assert code == cli.EXIT_INPUT

def test_verify(capsys):
    out,code = run(capsys,'verify','--seed','7','--count','20')
    assert code == cli.EXIT_OK
    assert (out['seed'],out['count'],out['failures']) == (7,20,[])

def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(['--version'])
    assert e.value.code == 0

def test_parse_field():
    f = cli.parse_field('z^2 + (0+1i)*z')
    u,v = f(1.,0.)
    assert (float(u),float(v)) == pytest.approx((1.,1.))
    with pytest.raises(cli.expr.error) as e:
        cli.parse_field('z^^')
    assert e.value.offset == 2

def test_jsonable():
    from fractions import Fraction
    out = cli.jsonable({Fraction(1,2):[Fraction(3),True,None],'k':(1,2)})
    assert out == {'1/2':['3/1',True,None],'k':[1,2]}
