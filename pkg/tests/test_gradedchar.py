import json

import pytest
from hypothesis import given, strategies as st

from sl2current.gradedchar import (
    GradedChar,
    a_shift,
    default_window,
    gchar_dual,
    gchar_tau,
    gchar_tensor,
    gchar_tilting,
    gchar_wedge_w1,
    gchar_weyl_global,
    gchar_weyl_local,
    socle_grade,
    trivial,
    weight_hilbert,
)
from sl2current.qseries import TruncSeries, WindowError, poch_inv, q_int, u
from sl2current.sl2char import char_mul, irr_char

P = TruncSeries.poly


def char(d, window=(-20, 20)):
    return GradedChar(d, window)


def test_local_examples():
    assert gchar_weyl_local(1) == char({1: 1})
    assert gchar_weyl_local(2) == char({2: 1, 0: u})
    assert gchar_weyl_local(3) == char({3: 1, 1: u + u * u})


def test_global_examples():
    assert gchar_weyl_global(0) == char({0: 1})
    g1 = gchar_weyl_global(1, (0, 2))
    assert g1[1].terms() == {0: 1, 1: 1, 2: 1} and g1.hi == 2
    assert gchar_weyl_global(2, (0, 3))[2].terms() == {0: 1, 1: 1, 2: 2, 3: 2}


def test_weight_hilbert_examples():
    assert weight_hilbert(2, 1, (0, 2)).terms() == {0: 1, 1: 2, 2: 3}
    assert weight_hilbert(1, 0, (0, 2)).terms() == {0: 1, 1: 1, 2: 1}
    assert weight_hilbert(3, 4).is_zero()


def test_tau_examples():
    chi = gchar_weyl_local(4)
    assert gchar_tau(chi, 0) == chi
    assert gchar_tau(char({1: 1}), 3) == char({1: TruncSeries.monomial(3)})
    assert gchar_tau(gchar_tau(chi, 5), -5) == chi


def test_dual_examples():
    assert gchar_dual(gchar_weyl_local(2)) == char({2: 1, 0: TruncSeries.monomial(-1)})
    chi = gchar_weyl_local(5)
    assert gchar_dual(gchar_dual(chi)) == chi
    assert gchar_dual(gchar_weyl_local(1)) == char({1: 1})


def test_dual_rejects_infinite_characters():
    with pytest.raises(WindowError):
        gchar_dual(gchar_weyl_global(2, (0, 10)))


def test_tensor_examples():
    chi = gchar_weyl_local(3)
    assert gchar_tensor(chi, trivial()) == chi
    assert gchar_tensor(gchar_weyl_local(1), gchar_weyl_local(1)) == char({2: 1, 0: 1})
    w = (0, 12)
    lhs = gchar_tensor(gchar_weyl_global(1, w), gchar_weyl_global(1, w))
    rhs = gchar_weyl_global(2, w).scale(q_int(2)) + gchar_weyl_global(0, w).scale(poch_inv(1, 12))
    assert lhs.restrict(w) == rhs.restrict(w)
    assert lhs.hi == 12


def test_tilting_examples():
    assert gchar_tilting(0) == char({0: 1})
    assert gchar_tilting(1, (0, 10)) == gchar_weyl_global(1, (0, 10))
    t2 = gchar_tilting(2, (-1, 10))
    extra = GradedChar({0: poch_inv(1, 11).shift(-1)}, (-1, 10))
    assert t2 == gchar_weyl_global(2, (-1, 10)) + extra


def test_tilting_widens_window_for_negative_grades():
    t = gchar_tilting(5, (0, 10))
    assert t.lo <= -socle_grade(5)
    assert min(f.support()[0] for f in t.terms.values()) == -socle_grade(5)


def test_wedge_examples():
    assert gchar_wedge_w1(1, (0, 8)) == GradedChar({1: poch_inv(1, 8)}, (0, 8))
    assert gchar_wedge_w1(2, (0, 8))[0].agrees(poch_inv(2, 8))


def test_helpers():
    assert default_window(3) == (-9, 27)
    assert [a_shift(l) for l in range(5)] == [0, 0, 1, 3, 6]
    assert [socle_grade(l) for l in range(7)] == [0, 0, 1, 2, 4, 6, 9]


def test_negative_labels_rejected():
    with pytest.raises(ValueError):
        GradedChar({-1: 1}, (0, 0))


def test_json_and_csv():
    chi = gchar_weyl_global(2, (0, 4))
    data = json.loads(json.dumps(chi.to_json()))
    assert data["window"] == {"lo": 0, "hi": 4}
    assert [t["weight"] for t in data["terms"]] == [0, 2]
    back = GradedChar.from_json(data)
    assert back == chi and back.window == chi.window
    rows = chi.to_csv().splitlines()
    assert rows[0] == "weight,exponent,coefficient"
    assert rows[1] == "0,1,1"


def test_weight_series_and_layers():
    chi = gchar_weyl_local(3)
    assert chi.weight_series(1) == P([1, 1, 1])
    assert chi.layer(2) == {1: 1}
    assert chi.collapse() == char_mul(char_mul(irr_char(1), irr_char(1)), irr_char(1))


# -- invariants -------------------------------------------------------------------

@pytest.mark.parametrize("lam", range(0, 15))
def test_local_dimension(lam):
    assert gchar_weyl_local(lam).dim() == 2 ** lam


@pytest.mark.parametrize("lam", range(1, 13))
def test_local_socle_and_positivity(lam):
    chi = gchar_weyl_local(lam)
    assert chi[lam] == P([1])
    assert all(f.is_nonneg() for f in chi.terms.values())
    top = max(f.support()[1] for f in chi.terms.values())
    assert top == socle_grade(lam)
    assert chi.layer(top) == {lam % 2: 1}


@pytest.mark.parametrize("lam", range(0, 7))
def test_tensor_collapses_to_sl2_product(lam):
    for mu in range(0, 7):
        g = gchar_tensor(gchar_weyl_local(lam), gchar_weyl_local(mu))
        assert g.collapse() == char_mul(gchar_weyl_local(lam).collapse(), gchar_weyl_local(mu).collapse())


@pytest.mark.parametrize("lam", range(0, 5))
def test_global_is_weight_hilbert_sum(lam):
    w = (0, 10)
    g = gchar_weyl_global(lam, w)
    for p in range(lam + 1):
        assert g.weight_series(lam - 2 * p).agrees(weight_hilbert(lam, p, w))


@given(st.integers(0, 8), st.integers(-6, 6))
def test_tau_dual_commute(lam, s):
    chi = gchar_weyl_local(lam)
    assert gchar_dual(gchar_tau(chi, s)) == gchar_tau(gchar_dual(chi), -s)
