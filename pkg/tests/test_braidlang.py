"""Braid parsing, closure invariants, and the mod-2 sign data."""

import math
import random

import pytest

from mjones.braidlang import (
    ArfData,
    BraidSyntaxError,
    BraidWord,
    LINK_TABLE,
    arf_invariant,
    c2_pair,
    closure_permutation,
    format_braid,
    jones_from_arf,
    link_invariants,
    lookup_arf_data,
    parse_braid,
)

HOPF = BraidWord(2, (1, 1))
TREFOIL = BraidWord(2, (1, 1, 1))
SOLOMON = BraidWord(2, (1, 1, 1, 1))
FIG8 = BraidWord(3, (1, -2, 1, -2))
BORROMEAN = BraidWord(3, (1, -2, 1, -2, 1, -2))


def test_parse_plain_integers():
    word = parse_braid("1 1")
    assert word.strands == 2
    assert word.letters == (1, 1)


def test_parse_generator_tokens():
    word = parse_braid("s1 s2^-1 s1 s2^-1 s1 s2^-1")
    assert word.strands == 3
    assert word.letters == (1, -2, 1, -2, 1, -2)


def test_parse_mixed_tokens():
    assert parse_braid("s2 -1 3 s1^-1").letters == (2, -1, 3, -1)


def test_parse_strands_prefix():
    word = parse_braid("strands=4 s1 s1")
    assert word.strands == 4
    assert word.letters == (1, 1)


def test_parse_empty_word():
    assert parse_braid("").strands == 1
    assert parse_braid("strands=3").letters == ()


def test_parse_rejects_out_of_range_generator():
    with pytest.raises(BraidSyntaxError, match="token 2.*out of range"):
        parse_braid("strands=2 s3")


def test_parse_rejects_zero_and_malformed():
    with pytest.raises(BraidSyntaxError, match="token 1.*index 0"):
        parse_braid("s0")
    with pytest.raises(BraidSyntaxError, match="token 2.*malformed"):
        parse_braid("s1 sX")
    with pytest.raises(BraidSyntaxError, match="token 3"):
        parse_braid("s1 s1 1.5")


def test_format_canonical():
    assert format_braid(FIG8) == "s1 s2^-1 s1 s2^-1"
    assert format_braid(BraidWord(4, (1, 1))) == "strands=4 s1 s1"
    assert format_braid(BraidWord(3, ())) == "strands=3"


def test_parse_print_round_trip_random():
    rng = random.Random(7)
    for _ in range(200):
        strands = rng.randint(1, 6)
        length = rng.randint(0, 10)
        letters = tuple(
            rng.choice([-1, 1]) * rng.randint(1, max(1, strands - 1))
            for _ in range(length)
        ) if strands > 1 else ()
        word = BraidWord(strands, letters)
        assert parse_braid(format_braid(word)) == word


def test_braidword_validation():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(0, ())
    with pytest.raises(ValueError):
        BraidWord(3, (0,))


def test_closure_permutation_examples():
    assert closure_permutation(HOPF) == (0, 1)
    assert closure_permutation(TREFOIL) == (1, 0)
    # six transpositions composing to the identity
    assert closure_permutation(BORROMEAN) == (0, 1, 2)


def test_closure_permutation_ignores_signs():
    rng = random.Random(11)
    for _ in range(50):
        strands = rng.randint(2, 5)
        letters = [rng.randint(1, strands - 1) for _ in range(rng.randint(1, 8))]
        flipped = [g * rng.choice([-1, 1]) for g in letters]
        assert closure_permutation(BraidWord(strands, tuple(letters))) == \
            closure_permutation(BraidWord(strands, tuple(flipped)))


def test_link_invariants_hopf():
    inv = link_invariants(HOPF)
    assert inv.writhe == 2
    assert inv.components == 2
    assert inv.linking[0][1] == 1
    assert not inv.proper


def test_link_invariants_trefoil():
    inv = link_invariants(TREFOIL)
    assert inv.writhe == 3
    assert inv.components == 1
    assert inv.proper


def test_link_invariants_borromean():
    inv = link_invariants(BORROMEAN)
    assert inv.writhe == 0
    assert inv.components == 3
    assert all(inv.linking[i][j] == 0 for i in range(3) for j in range(3))
    assert inv.proper


def test_link_invariants_solomon():
    inv = link_invariants(SOLOMON)
    assert inv.writhe == 4
    assert inv.components == 2
    assert inv.linking[0][1] == 2
    assert inv.proper


def test_link_invariants_empty_word():
    inv = link_invariants(BraidWord(3, ()))
    assert inv.writhe == 0
    assert inv.components == 3
    assert inv.proper


def test_linking_matrix_symmetric_zero_diagonal():
    rng = random.Random(13)
    for _ in range(50):
        strands = rng.randint(2, 5)
        letters = tuple(
            rng.choice([-1, 1]) * rng.randint(1, strands - 1)
            for _ in range(rng.randint(0, 10))
        )
        inv = link_invariants(BraidWord(strands, letters))
        m = inv.linking
        assert all(m[i][i] == 0 for i in range(inv.components))
        assert all(m[i][j] == m[j][i] for i in range(inv.components) for j in range(inv.components))


def test_writhe_of_word_times_reverse_inverse_vanishes():
    rng = random.Random(17)
    for _ in range(50):
        strands = rng.randint(2, 5)
        letters = tuple(
            rng.choice([-1, 1]) * rng.randint(1, strands - 1)
            for _ in range(rng.randint(0, 8))
        )
        word = BraidWord(strands, letters)
        assert (word * word.inverse()).writhe == 0


def test_component_count_sign_invariant():
    rng = random.Random(19)
    for _ in range(50):
        strands = rng.randint(2, 5)
        letters = [rng.randint(1, strands - 1) for _ in range(rng.randint(1, 8))]
        base = link_invariants(BraidWord(strands, tuple(letters))).components
        flipped = [g * rng.choice([-1, 1]) for g in letters]
        assert link_invariants(BraidWord(strands, tuple(flipped))).components == base


def test_c2_pair_examples():
    assert c2_pair(2) == 1
    assert c2_pair(0) == 0
    assert c2_pair(5) == 0   # 5*24/6 = 20, even


def test_c2_pair_matches_direct_formula():
    for lk in range(-10, 11):
        assert c2_pair(lk) == (lk * (lk * lk - 1) // 6) % 2


def test_arf_invariant_examples():
    assert arf_invariant(link_invariants(TREFOIL), ArfData(c1=(1,))) == 1
    assert arf_invariant(link_invariants(SOLOMON), ArfData(c1=(0, 0))) == 1
    assert arf_invariant(link_invariants(BORROMEAN), ArfData(c1=(0, 0, 0), c3=(1,))) == 1


def test_arf_invariant_rejects_non_proper():
    with pytest.raises(ValueError, match="not proper"):
        arf_invariant(link_invariants(HOPF), ArfData(c1=(0, 0)))


def test_arf_invariant_rejects_bad_dimensions():
    with pytest.raises(ValueError, match="c1"):
        arf_invariant(link_invariants(TREFOIL), ArfData(c1=(1, 0)))
    with pytest.raises(ValueError, match="c3"):
        arf_invariant(link_invariants(BORROMEAN), ArfData(c1=(0, 0, 0), c3=()))


def test_jones_from_arf_values():
    assert jones_from_arf(link_invariants(HOPF), None) == 0.0
    assert jones_from_arf(link_invariants(TREFOIL), 1) == -1.0
    assert jones_from_arf(link_invariants(BORROMEAN), 1) == -2.0
    assert jones_from_arf(link_invariants(SOLOMON), 1) == pytest.approx(-math.sqrt(2))


def test_jones_from_arf_argument_contract():
    with pytest.raises(ValueError):
        jones_from_arf(link_invariants(HOPF), 0)
    with pytest.raises(ValueError):
        jones_from_arf(link_invariants(TREFOIL), None)


def test_builtin_table_covers_sample_links():
    for key in ("s1", "s1 s1", "s1 s1 s1", "s1 s1 s1 s1",
                "s1 s2^-1 s1 s2^-1", "s1 s2^-1 s1 s2^-1 s1 s2^-1"):
        assert key in LINK_TABLE


def test_lookup_arf_data_normalises_word():
    assert lookup_arf_data(parse_braid("1 1 1")) == ArfData(c1=(1,))
    assert lookup_arf_data(parse_braid("s1 s2")) is None


def test_lookup_arf_data_empty_words():
    assert lookup_arf_data(BraidWord(3, ())) == ArfData(c1=(0, 0, 0), c3=(0,))


def test_lookup_arf_data_padded_word():
    data = lookup_arf_data(parse_braid("strands=3 s1 s1 s1"))
    assert data == ArfData(c1=(1, 0))
    padded_borr = lookup_arf_data(parse_braid("strands=4 s1 s2^-1 s1 s2^-1 s1 s2^-1"))
    assert padded_borr.c1 == (0, 0, 0, 0)
    assert padded_borr.c3 == (1, 0, 0, 0)   # only the original triple counts


def test_arf_route_matches_bracket_oracle_on_proper_links():
    # cross-module property: the closed form and the state sum agree in sign
    # and magnitude on every tabulated proper link, including padded ones
    from mjones.kauffman_oracle import jones_at_i

    words = [
        parse_braid("s1"),
        TREFOIL, SOLOMON, FIG8, BORROMEAN,
        BraidWord(1, ()), BraidWord(2, ()), BraidWord(3, ()),
        TREFOIL.with_strands(3),
        BORROMEAN.with_strands(4),
    ]
    for word in words:
        inv = link_invariants(word)
        data = lookup_arf_data(word)
        assert data is not None
        expected = jones_from_arf(inv, arf_invariant(inv, data)) if inv.proper else 0.0
        assert jones_at_i(word) == pytest.approx(expected, abs=1e-9)
