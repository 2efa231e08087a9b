from fractions import Fraction

from earlyexp.crosscheck import Lcg64, run_crosscheck


def test_generator_sequence_is_frozen():
    rng = Lcg64(0)
    assert [rng.next() for _ in range(3)] == [167951807, 218396424, 1299921937]
    rng = Lcg64(42)
    assert [rng.randint(1, 6) for _ in range(5)] == [5, 3, 5, 4, 3]


def test_small_run_no_falsification():
    report = run_crosscheck(Fraction(1, 10**6), 30, 7)
    assert report.falsified == 0
    assert report.exit_code == 0


def test_same_seed_same_report():
    a = run_crosscheck(Fraction(1, 10**4), 20, 3).render()
    b = run_crosscheck(Fraction(1, 10**4), 20, 3).render()
    assert a == b


def test_loose_precision_more_inconclusive():
    tight = run_crosscheck(Fraction(1, 10**6), 30, 1)
    loose = run_crosscheck(Fraction(1, 10), 30, 1)
    assert loose.falsified == 0
    assert loose.inconclusive >= tight.inconclusive
    assert "warning:" in loose.render()
