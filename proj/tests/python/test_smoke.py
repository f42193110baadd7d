import mincsp


def test_classify_named_languages():
    nae = mincsp.Language([mincsp.rel_nae()])
    assert mincsp.classify(nae).name == "HARD_NP"

    parity = mincsp.Language([mincsp.rel_even(4), mincsp.rel_one(), mincsp.rel_zero()])
    cls = mincsp.classify(parity)
    assert cls.name == "ODDSET_EQUIVALENT"
    assert cls.properties.affine
    assert not cls.properties.zero_valid

    ihs = mincsp.Language(
        [mincsp.rel_or(3), mincsp.rel_one(), mincsp.rel_zero(), mincsp.rel_implies()]
    )
    assert mincsp.classify(ihs).name == "APPROX_IHSB"
    assert mincsp.classify(ihs).ihs_width == 3


def test_parse_and_serialize_round_trip():
    lang = mincsp.Language([mincsp.rel_implies(), mincsp.rel_xor()])
    inst = mincsp.random_dcsp(lang, 4, 6, seed=7)
    text = mincsp.serialize_dcsp(inst)
    again = mincsp.parse_dcsp(text)
    assert mincsp.serialize_dcsp(again) == text


def test_solvers_agree_with_brute_force():
    lang = mincsp.Language([mincsp.rel_xor(), mincsp.rel_implies()])
    for seed in range(1, 6):
        inst = mincsp.random_dcsp(lang, 5, 8, seed=seed)
        expected = mincsp.brute_force_dcsp(inst)
        got = mincsp.solve_auto(inst, 8)
        assert got.status == "optimal"
        assert got.cost == expected.cost


def test_reduction_chain_preserves_optimum():
    nc = mincsp.random_nc(6, 4, seed=3)
    direct = mincsp.solve_nc(nc)
    odds = mincsp.nc_to_oddset(nc).target
    via_sets = mincsp.solve_oddset(odds, odds.universe)
    assert via_sets.status == "optimal"
    assert via_sets.cost == direct.cost


def test_self_improvement_squares():
    inst = mincsp.EvenOddSetInstance()
    inst.universe = 3
    inst.add_set([1, 2])
    inst.add_set([2, 3])
    k = mincsp.solve_oddset(inst, 3).cost
    squared = mincsp.oddset_self_improve(inst).target
    assert mincsp.solve_oddset(squared, squared.universe).cost == 1 + k + k * k


def test_parse_error_raises():
    import pytest

    with pytest.raises(mincsp.ParseError):
        mincsp.parse_language("garbage\n")
