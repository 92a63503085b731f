import math
import random

import pytest

from pbw.coxeter import (BRAID, CANCEL, COMMUTE, CellType, GeneratorWord,
                         Move, MoveError, apply_move, classify_pair,
                         codim2_census, codim2_census_by_cosets, contract_loop,
                         evaluate, hexagon_loop, identity, is_identity_loop,
                         loop_from_arrangements, random_identity_loop, replay,
                         sample_excursion_s4, square_loop)
from pbw.errors import SearchBudgetExceeded


def test_evaluate_empty():
    assert evaluate(GeneratorWord(4)) == identity(4)


def test_evaluate_involution():
    assert evaluate(GeneratorWord(2, (1, 1))) == identity(2)


def test_evaluate_braid_relation():
    left = evaluate(GeneratorWord(3, (1, 2, 1)))
    right = evaluate(GeneratorWord(3, (2, 1, 2)))
    assert left == right == (2, 1, 0)


def test_generator_word_validation():
    with pytest.raises(ValueError):
        GeneratorWord(3, (3,))
    with pytest.raises(ValueError):
        GeneratorWord(3, (0,))
    with pytest.raises(ValueError):
        GeneratorWord(0)


def test_is_identity_loop():
    assert is_identity_loop(GeneratorWord(3, (1, 2, 1, 2, 1, 2)))
    assert not is_identity_loop(GeneratorWord(3, (1,)))
    assert is_identity_loop(GeneratorWord(3))


def test_apply_move_examples():
    assert apply_move(GeneratorWord(2, (1, 1)), Move(CANCEL, 1)).letters == ()
    assert apply_move(GeneratorWord(4, (1, 3)), Move(COMMUTE, 1)).letters == (3, 1)
    assert apply_move(GeneratorWord(3, (1, 2, 1)), Move(BRAID, 1)).letters == (2, 1, 2)
    assert apply_move(GeneratorWord(3, (2, 1, 2)), Move(BRAID, 1)).letters == (1, 2, 1)


@pytest.mark.parametrize("word, move", [
    ((1, 2), Move(CANCEL, 1)),
    ((1, 2), Move(COMMUTE, 1)),
    ((1, 2, 2), Move(BRAID, 1)),
    ((1, 1), Move(CANCEL, 2)),
    ((1, 1), Move("frobnicate", 1)),
])
def test_apply_move_inapplicable(word, move):
    with pytest.raises(MoveError):
        apply_move(GeneratorWord(4, word), move)


def test_moves_preserve_evaluation():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.choice((3, 4, 5))
        g = GeneratorWord(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 8))))
        perm = evaluate(g)
        for p in range(1, len(g.letters) + 1):
            for kind in (CANCEL, COMMUTE, BRAID):
                try:
                    moved = apply_move(g, Move(kind, p))
                except MoveError:
                    continue
                assert evaluate(moved) == perm


def test_move_length_bookkeeping():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.choice((3, 4))
        g = GeneratorWord(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(2, 8))))
        for p in range(1, len(g.letters) + 1):
            for kind, delta in ((CANCEL, -2), (COMMUTE, 0), (BRAID, 0)):
                try:
                    moved = apply_move(g, Move(kind, p))
                except MoveError:
                    continue
                assert len(moved.letters) == len(g.letters) + delta


def test_identity_loops_have_even_length():
    rng = random.Random(6)
    for _ in range(25):
        g = random_identity_loop(4, 12, rng)
        assert len(g.letters) % 2 == 0


def test_replay_reports_failing_step():
    with pytest.raises(MoveError, match="step 1") as info:
        replay(GeneratorWord(3, (1, 2)), [Move(CANCEL, 1)])
    assert info.value.step == 1
    with pytest.raises(MoveError, match="step 2") as info:
        replay(GeneratorWord(3, (1, 1, 2)), [Move(CANCEL, 1), Move(CANCEL, 1)])
    assert info.value.step == 2


def test_contract_trivial_cases():
    assert contract_loop(GeneratorWord(3)) == []
    assert contract_loop(GeneratorWord(2, (1, 1))) == [Move(CANCEL, 1)]


def test_contract_hexagon_loop():
    g = hexagon_loop(3)
    cert = contract_loop(g)
    assert cert == [Move(BRAID, 1), Move(CANCEL, 3), Move(CANCEL, 2), Move(CANCEL, 1)]
    assert replay(g, cert).letters == ()


def test_contract_square_loop():
    g = square_loop(4, 1, 3)
    cert = contract_loop(g)
    assert replay(g, cert).letters == ()
    assert len(cert) == 3  # one commute then two cancels


def test_contract_rejects_non_loop():
    with pytest.raises(ValueError, match="identity"):
        contract_loop(GeneratorWord(3, (1,)))


def test_contract_budget():
    g = GeneratorWord(5, (1, 2, 3, 4) * 5)
    assert is_identity_loop(g)
    with pytest.raises(SearchBudgetExceeded):
        contract_loop(g, max_nodes=1)


def test_contract_random_loops_replay_to_empty():
    rng = random.Random(1)
    for n in (4, 5):
        for _ in range(25):
            g = random_identity_loop(n, 12, rng)
            cert = contract_loop(g)
            assert replay(g, cert).letters == ()


def test_classify_pair():
    assert classify_pair(1, 2) is CellType.TRICKY
    assert classify_pair(1, 3) is CellType.EASY
    assert classify_pair(2, 3) is CellType.TRICKY
    with pytest.raises(ValueError):
        classify_pair(2, 1)
    with pytest.raises(ValueError):
        classify_pair(0, 1)
    with pytest.raises(ValueError):
        classify_pair(1, 4, n=4)


def test_census_closed_formula():
    assert codim2_census(3) == {CellType.TRICKY: 1, CellType.EASY: 0}
    assert codim2_census(4) == {CellType.TRICKY: 8, CellType.EASY: 6}
    assert codim2_census(5) == {CellType.TRICKY: 60, CellType.EASY: 90}
    with pytest.raises(ValueError):
        codim2_census(2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_census_matches_coset_partition(n):
    assert codim2_census(n) == codim2_census_by_cosets(n)


def test_census_scaling_identity():
    for n in (3, 4, 5, 6):
        total = codim2_census(n)
        pairs = (n - 1) * (n - 2) // 2
        tricky_pairs = n - 2
        assert total[CellType.TRICKY] == tricky_pairs * math.factorial(n) // 6
        assert total[CellType.EASY] == (pairs - tricky_pairs) * math.factorial(n) // 4


def test_loop_from_arrangements_validates():
    with pytest.raises(ValueError, match="adjacent swap"):
        loop_from_arrangements(3, [(0, 1, 2), (2, 1, 0)])
    with pytest.raises(ValueError, match="arrangement"):
        loop_from_arrangements(3, [(0, 1, 1), (0, 1, 1)])
    g = loop_from_arrangements(3, [(0, 1, 2), (1, 0, 2), (0, 1, 2)])
    assert g.letters == (1, 1)


def test_sample_excursion():
    g = sample_excursion_s4()
    assert g.n == 4
    assert len(g.letters) == 18
    assert is_identity_loop(g)
    # the tour visits 18 distinct arrangements before closing up
    seen = {identity(4)}
    perm = list(range(4))
    for p in g.letters[:-1]:
        perm[p - 1], perm[p] = perm[p], perm[p - 1]
        assert tuple(perm) not in seen
        seen.add(tuple(perm))
    assert len(seen) == 18


def test_random_identity_loop_seeded_determinism():
    a = [random_identity_loop(4, 12, random.Random(0)).letters for _ in range(3)]
    assert a[0] == a[1] == a[2]
    g = random_identity_loop(5, 8, random.Random(9))
    assert is_identity_loop(g)
    assert 2 <= len(g.letters) <= 8


def test_square_and_hexagon_loop_guards():
    with pytest.raises(ValueError):
        square_loop(4, 1, 2)
    with pytest.raises(ValueError):
        hexagon_loop(3, 2)
    assert is_identity_loop(hexagon_loop(4, 2))
    assert is_identity_loop(square_loop(5, 2, 4))
