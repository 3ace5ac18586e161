from fractions import Fraction

import pytest

import skewlr


def test_schur_pieri():
    s = skewlr.Algebra("schur")
    assert s.product("s[1]", "s[1]") == {(2,): 1, (1, 1): 1}
    assert s.format(s.product("s[1]", "s[1]")) == "1\ts[2]\n1\ts[1,1]"


def test_rational_coefficients():
    s = skewlr.Algebra("schur")
    assert s.product({(1,): Fraction(1, 2)}, "s[1]") == {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}


def test_skew_product_matches_oracle():
    s = skewlr.Algebra("schur")
    total = s.skew_product(((2, 1), (1,)), ((1,), ()))
    assert total == {
        ((3, 1), (1,)): 1,
        ((2, 2), (1,)): 1,
        ((2, 1, 1), (1,)): 1,
        ((2, 1), ()): -1,
    }
    assert s.evaluate(total) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    assert s.evaluate(total) == s.skew_product_oracle(((2, 1), (1,)), ((1,), ()))
    assert skewlr.skew_lr_combinatorial(((2, 1), (1,)), ((1,), ())) == total


def test_lr_coefficient():
    assert skewlr.lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


def test_kschur_golden():
    assert skewlr.skew_k_pieri((1,), (2, 1, 1), 2, 2) == {((2, 2, 1, 1), (1,)): 1, ((2, 1, 1, 1), ()): -1}
    k2 = skewlr.Algebra("kschur", 2)
    assert k2.skew((2, 2, 1, 1), (1,)) == {(2, 1, 1, 1): 2, (2, 2, 1): 1}


def test_ribbon_golden():
    assert skewlr.descent_composition([1, 4, 8, 6, 2, 3, 7, 9, 5]) == [3, 1, 4, 1]
    assert skewlr.word_section([3, 1, 4, 1]) == [7, 8, 9, 6, 2, 3, 4, 5, 1]
    assert skewlr.ribbon_conjugate([3, 1, 4, 1]) == [2, 1, 1, 3, 1, 1]
    r = skewlr.Algebra("ribbon")
    assert r.skew((2, 2, 1), (1, 1, 1)) == {(2,): 1, (1, 1): 1}


def test_q_product():
    q = skewlr.Algebra("q")
    assert q.product("Q[1]", "Q[1]") == {(2,): 2}


def test_antipode_and_coproduct():
    s = skewlr.Algebra("schur")
    assert s.antipode("s[2]") == {(1, 1): 1}
    assert s.coproduct("s[1]") == {((1,), ()): 1, ((), (1,)): 1}


def test_verify():
    for name, passed, cases, witness in skewlr.verify("schur", "skew-lr", 3):
        assert passed and cases > 0 and witness == ""


def test_errors():
    s = skewlr.Algebra("schur")
    with pytest.raises(ValueError):
        s.element("s[2")
    with pytest.raises(ValueError):
        skewlr.Algebra("kschur")
    with pytest.raises(OverflowError):
        s.element("s[300]")
