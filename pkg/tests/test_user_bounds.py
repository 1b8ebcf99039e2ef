import os
from fractions import Fraction as F
import pytest

from subcubic_matching.bounds import evaluate_bound
from subcubic_matching.errors import UserBoundsParseError
from subcubic_matching.graph import complete_graph, star_graph
from subcubic_matching.polytope import contains, unit_cube, vertices
from subcubic_matching.user_bounds import BoundFileParser

FIXTURE_DIRECTORY = os.path.join(os.path.dirname(__file__), 'fixtures')
VALID_BOUNDS_DIRECTORY = os.path.join(FIXTURE_DIRECTORY, 'valid_bounds')
INVALID_BOUNDS_DIRECTORY = os.path.join(FIXTURE_DIRECTORY, 'invalid_bounds')

PARSE_ERROR_CASES = [
    ('no_exist.yml', 'not found'),
    ('invalid_yaml.yml', 'Syntax error'),
    ('invalid_json.json', 'Syntax error'),
    ('missing_entry.yml', 'Invalid entry bounds/0'),
    ('unknown_field.yml', 'Invalid entry bounds/0'),
    ('decimal_triple.yml', 'Bound half: Decimal notation is not accepted'),
    ('duplicate_name.yml', 'Duplicate name half'),
    ('reserved_name.yml', 'reserved for a built-in bound'),
    ('reserved_polyhedron.yml', 'Name cube is reserved for a built-in '
                                'polyhedron'),
    ('bad_halfspace.yml', 'Polyhedron broken:'),
    ('zero_normal.yml', 'Polyhedron broken: Half-space normal must be '
                        'nonzero')]


class TestBoundFileParser(object):

    def test_read_dir__success(self):
        parser = BoundFileParser()
        parser.read_data(VALID_BOUNDS_DIRECTORY)

        names = [spec.name for spec in parser.get_bounds()]

        assert names == ["b5_global", "biedl_question", "half"]
        assert sorted(parser.get_polyhedron("box").labels()) == \
            sorted(unit_cube().labels())

    def test_read_files__success(self):
        parser = BoundFileParser()
        parser.read_data(os.path.join(VALID_BOUNDS_DIRECTORY, 'bounds.yml'))

        half = parser.get_bound("half")
        assert half.triple == (F(1, 2), 0, 0)
        assert half.k_const == 1
        assert half.per_component

        question = parser.get_bound("biedl_question")
        assert question.triple == (F(1, 3), F(4, 9), F(1, 3))
        assert question.k_const == 0
        assert not question.per_component

        with pytest.raises(UserBoundsParseError) as e:
            parser.get_polyhedron("box")

        assert "Polyhedron box not defined" in str(e.value)

    def test_read_json__success(self):
        parser = BoundFileParser()
        parser.read_data(os.path.join(VALID_BOUNDS_DIRECTORY,
                                      'polyhedra.json'))

        spec = parser.get_bound("b5_global")
        assert spec.k_const == F(1, 9)
        assert not spec.per_component

        box = parser.get_polyhedron("box")
        assert box.name == "box"
        assert len(box) == 6
        assert len(vertices(box)) == 8
        assert contains(box, (F(1, 2), F(1, 2), F(1, 2))).inside

    def test_bounds__usable(self):
        parser = BoundFileParser()
        parser.read_data(VALID_BOUNDS_DIRECTORY)

        report = evaluate_bound(complete_graph(4), parser.get_bound("half"))

        assert report.rhs == 1
        assert report.slack == 1

        report = evaluate_bound(star_graph(3),
                                parser.get_bound("b5_global"))

        assert report.rhs == F(4, 9) + F(2, 3) - F(1, 9)

    @pytest.mark.parametrize("filename, message", PARSE_ERROR_CASES)
    def test_read_files__invalid(self, filename, message):
        parser = BoundFileParser()
        with pytest.raises(UserBoundsParseError) as e:
            parser.read_data(os.path.join(INVALID_BOUNDS_DIRECTORY,
                                          filename))

        assert message in str(e.value)

    def test_read_files__duplicate_across_files(self):
        parser = BoundFileParser()
        parser.read_data(os.path.join(VALID_BOUNDS_DIRECTORY, 'bounds.yml'))

        with pytest.raises(UserBoundsParseError) as e:
            parser.read_data(os.path.join(VALID_BOUNDS_DIRECTORY,
                                          'bounds.yml'))

        assert "Duplicate name half" in str(e.value)

    def test_add_data__success(self):
        parser = BoundFileParser()
        parser.add_data("""
bounds:
  - name: third
    triple: 1/3,1/3,1/3
    k: 1/3
polyhedra:
  - name: corner
    halfspaces:
      - x3+x2+x1<=1
      - -x3<=0
      - -x2<=0
      - -x1<=0
""")

        assert parser.get_bound("third").k_const == F(1, 3)
        assert parser.get_polyhedron("corner").labels() == [
            "x3+x2+x1<=1", "-x3<=0", "-x2<=0", "-x1<=0"]

    def test_add_data__empty(self):
        parser = BoundFileParser()
        parser.add_data("")

        assert parser.get_bounds() == list()

    def test_add_data__not_mapping(self):
        parser = BoundFileParser()
        with pytest.raises(UserBoundsParseError) as e:
            parser.add_data("- a\n- b\n")

        assert "Invalid entry (top)" in str(e.value)

    def test_get_bound__not_defined(self):
        parser = BoundFileParser()
        with pytest.raises(UserBoundsParseError) as e:
            parser.get_bound("missing")

        assert "Bound missing not defined" in str(e.value)
