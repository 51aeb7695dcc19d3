"""Smoke tests for the python bindings."""

from fractions import Fraction

import exppairs


def frac(s):
    return Fraction(s)


def test_catalog():
    entries = exppairs.catalog()
    assert len(entries) == 7
    by_label = {e["label"]: e for e in entries}
    assert by_label["I"]["k"] == "0"
    assert by_label["I"]["l"] == "1"
    assert not by_label["I"]["eps"]
    assert by_label["H05"]["k"] == "32/205"
    assert by_label["H05"]["eps"]


def test_operators():
    assert exppairs.apply_operator("A", "0", "1") == {"k": "0", "l": "1", "eps": False}
    ba = exppairs.apply_operator("BA", "0", "1")
    assert frac(ba["k"]) == Fraction(1, 2)
    a = exppairs.apply_operator("A", "1/2", "1/2")
    assert (frac(a["k"]), frac(a["l"])) == (Fraction(1, 6), Fraction(2, 3))


def test_words():
    p = exppairs.eval_word("A BA A^4 H05")
    assert frac(p["k"]) == Fraction(8083, 50342)
    assert exppairs.word_to_string("A A BA I") == "A^2 BA I"
    fp = exppairs.eval_word("A (BA)^4 (A^2 BA A)^inf (0,1)", "1/1000000000000")
    assert abs(float(frac(fp["k"])) - 0.0932708561) < 1e-9


def test_gray_and_generation():
    words = exppairs.gray_words(3)
    assert len(words) == 8
    assert words[0] == "A^3 (1/6,2/3)"
    gen = exppairs.generation("(1/6,2/3)", 1)
    assert len(gen) == 2
    assert frac(gen[0]["k"]) == Fraction(1, 14)


def test_xi_and_mu():
    row = exppairs.xi(1, 4)
    assert row["value"] == "111/790"
    assert row["word"] == "H05"
    assert row["attained"]

    row = exppairs.mu("3/5")
    assert row["value"] == "1409/12170"

    row = exppairs.mu("2/3")
    assert abs(row["value_float"] - 0.0879154) < 1e-7


def test_delta_and_thm():
    row = exppairs.delta(1, 2)
    assert row["feasible"]
    t4 = exppairs.thm4(5)
    assert t4["alpha"] == "11/410"
    t6 = exppairs.thm6(10)
    assert t6["below_bound"]


def test_optimize_config():
    config = """
    {
      "objective": [
        {"num": ["11/10", "0", "0"], "den": ["0", "0", "1"]},
        {"num": ["0", "1", "-1/2"], "den": ["0", "0", "1"]}
      ]
    }
    """
    res = exppairs.optimize(config)
    assert res["feasible"]
    assert res["value"] == "176/1025"
    assert res["word"] == "H05"
