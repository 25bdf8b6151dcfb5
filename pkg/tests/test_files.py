import pytest

from suturekup import ExteriorAlgebra, LaurentRing, QQ, Representation
from suturekup.files import canonical_json, detect_input, diagram_from_data
from suturekup.fixtures import trefoil
from suturekup.files import diagram_to_data


def test_detect_input(tmp_path):
    d = tmp_path / "d.json"
    d.write_text(canonical_json(diagram_to_data(trefoil())))
    assert detect_input(str(d)) == "diagram"
    p = tmp_path / "p.json"
    p.write_text(canonical_json({"generators": ["g"], "closed_count": 1,
                                 "relators": ["g"]}))
    assert detect_input(str(p)) == "presentation"
    bad = tmp_path / "x.json"
    bad.write_text("{}")
    with pytest.raises(ValueError):
        detect_input(str(bad))


def test_iterated_coproduct_rejects_negative():
    H = ExteriorAlgebra(2)
    with pytest.raises(ValueError):
        H.iterated_coproduct(H.cointegral(), -1)


def test_lambda_extend_rejects_wrong_size():
    from suturekup import lambda_extend

    H = ExteriorAlgebra(2)
    with pytest.raises(ValueError):
        lambda_extend([[QQ.one]], H)


def test_lambda_extend_laurent_needs_unit_determinant():
    from suturekup import lambda_extend

    ring = LaurentRing(QQ, 1)
    H = ExteriorAlgebra(1, ring)
    non_unit = ring.from_terms({(0,): QQ.one, (1,): QQ.one})
    with pytest.raises(ValueError):
        lambda_extend([[non_unit]], H)
    # a monomial determinant is fine
    from suturekup import r_of

    unit = ring.monomial((2,), QQ.from_rational(3))
    assert r_of(lambda_extend([[unit]], H)) == unit


def test_singular_generator_matrix_rejected():
    with pytest.raises(ValueError):
        Representation(QQ, 2, [[[QQ.one, QQ.one], [QQ.one, QQ.one]]])


def test_diagram_from_data_tolerates_unreferenced_crossings():
    data = {
        "alpha_closed": [{"name": "alpha", "crossings": ["x1", "orphan"]}],
        "arcs": [],
        "beta": [{"name": "b", "crossings": [["x1", 1]], "basepoint_index": 0}],
    }
    D = diagram_from_data(data)
    from suturekup import validate

    assert not validate(D).valid
