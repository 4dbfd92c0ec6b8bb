import itertools

import pytest

from steintorus.errors import NotInSpanError, ValidationError
from steintorus.weyl import Family, WeylElement, enumerate_group, identity
from steintorus import descent_algebra as da

A3 = Family("A", 3)
C2 = Family("C", 2)


def test_basis_element_supports():
    # x_J sums the elements whose descent set is contained in J
    x = da.basis_element("x", [2], A3)
    assert {w.values for w, c in x.coeffs} == {(1, 2, 3), (1, 3, 2), (2, 3, 1)}
    assert all(c == 1 for _, c in x.coeffs)
    y = da.basis_element("y", [2], A3)
    assert {w.values for w, c in y.coeffs} == {(1, 3, 2), (2, 3, 1)}


def test_basis_index_validation():
    with pytest.raises(ValidationError):
        da.basis_element("x", [3], A3)  # affine index not allowed for x
    with pytest.raises(ValidationError):
        da.basis_element("xt", [], A3)
    with pytest.raises(ValidationError):
        da.basis_element("yt", [1, 2, 3], A3)  # the full affine class is empty
    # ... but the full x~ sum is legal (it is the sum of all group elements)
    full = da.basis_element("xt", [1, 2, 3], A3)
    assert len(full.coeffs) == 6


def test_x_is_sum_of_y_over_subsets():
    for fam in (A3, C2):
        universe = sorted(fam.finite_indices())
        for r in range(len(universe) + 1):
            for J in itertools.combinations(universe, r):
                total = da.GroupRingElement.from_dict(fam, {})
                for s in range(len(J) + 1):
                    for I in itertools.combinations(J, s):
                        total = total + da.basis_element("y", I, fam)
                assert total == da.basis_element("x", J, fam)


def test_finite_class_splits_into_two_affine_classes():
    for fam in (A3, C2):
        n = fam.affine_index
        universe = sorted(fam.finite_indices())
        for r in range(len(universe) + 1):
            for J in itertools.combinations(universe, r):
                lhs = da.basis_element("y", J, fam)
                parts = da.GroupRingElement.from_dict(fam, {})
                affine = set(fam.affine_indices())
                for K in (set(J), set(J) | {n}):
                    # the empty and the full affine class are empty sums
                    if K and K != affine:
                        parts = parts + da.basis_element("yt", K, fam)
                assert lhs == parts


def test_conversion_tables():
    conv = da.y_from_x_conversion(A3)
    J = frozenset({1, 2})
    assert set(conv["x_from_y"][J]) == {
        frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})
    }
    assert conv["y_from_x"][J][frozenset({1})] == -1
    assert conv["affine_refinement"](J) == (J, frozenset({1, 2, 3}))


def test_ring_identity():
    e = da.ring_identity(A3)
    x = da.basis_element("x", [1, 2], A3)
    assert da.multiply(e, x) == x == da.multiply(x, e)


def test_express_in_basis_roundtrip():
    for I in (frozenset(), frozenset({1}), frozenset({1, 2})):
        for J in (frozenset({2}), frozenset({1, 2})):
            p = da.multiply(
                da.basis_element("x", I, A3), da.basis_element("x", J, A3)
            )
            exp = da.express_in_basis(p, "x")
            assert da.evaluate_expansion(exp, "x", A3) == p


def test_express_in_basis_witness():
    lone = da.GroupRingElement.from_dict(
        A3, {WeylElement(A3, (2, 1, 3)): 1}
    )
    with pytest.raises(NotInSpanError) as exc:
        da.express_in_basis(lone, "x")
    u, v = exc.value.witness
    from steintorus.weyl import descent_set

    assert descent_set(u).indices == descent_set(v).indices


def test_worked_rank_three_identity():
    # x_{2} * x~_{1,2} = x~_{1,2} + x~_{1,2,3}
    lhs = da.multiply(
        da.basis_element("x", [2], A3), da.basis_element("xt", [1, 2], A3)
    )
    rhs = da.basis_element("xt", [1, 2], A3) + da.basis_element(
        "xt", [1, 2, 3], A3
    )
    assert lhs == rhs


def test_orbit_sums_and_psi():
    s = da.orbit_sum("sigma", [2], A3)
    assert da.psi(s) == da.basis_element("x", [2], A3)
    st = da.orbit_sum("sigmat", [1, 2], A3)
    assert da.psi(st) == da.basis_element("xt", [1, 2], A3)
    with pytest.raises(ValidationError):
        da.orbit_sum("sigmat", [], A3)


def test_psi_rejects_non_invariant_sums():
    from steintorus import coxfaces as cf

    F = cf.SetComposition(A3, ((1,), (2, 3)))
    s = da.FaceSum.from_dict(A3, False, {F: 1})
    with pytest.raises(ValidationError):
        da.psi(s)


def test_psi_reverses_products():
    for J in (frozenset({1}), frozenset({1, 2})):
        for K in (frozenset({2}), frozenset()):
            sJ = da.orbit_sum("sigma", J, A3)
            sK = da.orbit_sum("sigma", K, A3)
            lhs = da.psi(da.face_sum_product(sJ, sK))
            rhs = da.multiply(
                da.basis_element("x", K, A3), da.basis_element("x", J, A3)
            )
            assert lhs == rhs


def test_face_side_module_identity():
    # sigma~_{1,2} * sigma_{2} = sigma~_{1,2} + sigma~_{1,2,3}
    lhs = da.face_sum_product(
        da.orbit_sum("sigmat", [1, 2], A3), da.orbit_sum("sigma", [2], A3)
    )
    rhs = da.orbit_sum("sigmat", [1, 2], A3) + da.orbit_sum(
        "sigmat", [1, 2, 3], A3
    )
    assert lhs == rhs


def test_module_table_entry():
    table = da.module_table(A3)
    assert table["kind"] == "module"
    entry = next(
        e for e in table["entries"] if e["I"] == [2] and e["J"] == [1, 2]
    )
    assert entry["coeffs"] == {"[1,2]": 1, "[1,2,3]": 1}
    for e in table["entries"]:
        if e["I"] == []:
            key = "[" + ",".join(map(str, e["J"])) + "]"
            assert e["coeffs"] == {key: 1}


def test_solomon_table_against_convolution():
    table = da.solomon_table(A3)
    for e in table["entries"]:
        lhs = da.multiply(
            da.basis_element("x", e["I"], A3),
            da.basis_element("x", e["J"], A3),
        )
        rhs = da.GroupRingElement.from_dict(A3, {})
        import json

        for key, c in e["coeffs"].items():
            term = da.basis_element("x", json.loads(key), A3)
            rhs = rhs + da.GroupRingElement.from_dict(
                A3, {w: c * k for w, k in term.coeffs}
            )
        assert lhs == rhs


def test_descent_table_rank_three():
    # the full affine descent table of the six permutations
    expected = {
        (1, 2, 3): [3],
        (2, 1, 3): [1, 3],
        (1, 3, 2): [2, 3],
        (2, 3, 1): [2],
        (3, 1, 2): [1],
        (3, 2, 1): [1, 2],
    }
    from steintorus.weyl import affine_descent_set

    got = {
        w.values: affine_descent_set(w).sorted() for w in enumerate_group(A3)
    }
    assert got == expected


@pytest.mark.parametrize("suite", ["solomon", "module", "psi", "lrb",
                                   "euler", "counts"])
@pytest.mark.parametrize("fam", [A3, C2], ids=["A3", "C2"])
def test_suites_pass(suite, fam):
    report = da.verify(suite, fam)
    assert report["pass"], report["failures"][:3]
    assert report["checks"] > 0


def test_oracle_suite_type_a_only():
    assert da.verify("oracle", A3)["pass"]
    with pytest.raises(ValidationError):
        da.verify("oracle", C2)


def test_verify_all():
    report = da.verify("all", A3)
    assert report["pass"]
    assert len(report["reports"]) >= 6
