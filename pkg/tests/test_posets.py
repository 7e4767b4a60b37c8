"""Poset families, windows, explicit posets, and the multiset map."""

import random

import pytest

from helpers import random_explicit_poset
from posetlab import (
    BoundTooLarge,
    CyclicCovers,
    DuplicateElement,
    InvalidElement,
    InvalidInput,
    NotComparable,
    NoUniqueBottom,
    UnknownElementInCover,
    Window,
    bottom,
    enumerate_window,
    get_poset,
    ideal,
    integer_to_multiset,
    interval,
    leq,
    load_explicit_poset,
    multiset_to_integer,
)

DIV = get_poset("divisibility")
CHAIN = get_poset("chain")
SUBSETS = get_poset("subsets")
MULTISETS = get_poset("multisets")


class TestLeq:
    def test_divisibility(self):
        assert leq(DIV, 3, 12)
        assert not leq(DIV, 5, 12)

    def test_subsets(self):
        assert not leq(SUBSETS, (1, 3), (1, 2))
        assert leq(SUBSETS, (1,), (1, 2))

    def test_multisets_pointwise(self):
        assert leq(MULTISETS, {2: 1, 3: 1}, {2: 2, 3: 1})
        assert not leq(MULTISETS, {2: 2}, {2: 1, 3: 5})

    def test_rejects_foreign_encodings(self):
        with pytest.raises(InvalidElement):
            leq(DIV, "a", 3)
        with pytest.raises(InvalidElement):
            leq(DIV, 0, 3)
        with pytest.raises(InvalidElement):
            leq(SUBSETS, 3, (1,))
        with pytest.raises(InvalidElement):
            leq(MULTISETS, {4: 1}, {2: 1})


class TestInterval:
    def test_chain(self):
        assert interval(CHAIN, 2, 4) == [2, 3, 4]

    def test_divisibility(self):
        assert interval(DIV, 2, 12) == [2, 4, 6, 12]

    def test_subsets_canonical_order(self):
        assert interval(SUBSETS, (1,), (1, 2, 3)) == [
            (1,),
            (1, 2),
            (1, 3),
            (1, 2, 3),
        ]

    def test_multisets(self):
        got = interval(MULTISETS, (), ((2, 1), (3, 1)))
        assert got == [(), ((2, 1),), ((3, 1),), ((2, 1), (3, 1))]

    def test_not_comparable(self):
        with pytest.raises(NotComparable):
            interval(CHAIN, 5, 3)
        with pytest.raises(NotComparable):
            interval(DIV, 5, 12)


class TestIdealAndBottom:
    def test_examples(self):
        assert ideal(CHAIN, 3) == [1, 2, 3]
        assert ideal(DIV, 12) == [1, 2, 3, 4, 6, 12]
        assert ideal(SUBSETS, (1, 2)) == [(), (1,), (2,), (1, 2)]

    def test_bottoms(self):
        assert bottom(DIV) == 1
        assert bottom(CHAIN) == 1
        assert bottom(SUBSETS) == ()
        assert bottom(MULTISETS) == ()
        explicit = load_explicit_poset(
            {"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]]}
        )
        assert bottom(explicit) == "a"

    @pytest.mark.parametrize(
        "poset,window",
        [
            (DIV, Window(DIV, 40)),
            (CHAIN, Window(CHAIN, 40)),
            (SUBSETS, Window(SUBSETS, 4)),
            (MULTISETS, Window(MULTISETS, 40)),
        ],
    )
    def test_ideal_is_interval_from_bottom(self, poset, window):
        for x in enumerate_window(window):
            assert ideal(poset, x) == interval(poset, bottom(poset), x)


class TestWindows:
    def test_examples(self):
        assert enumerate_window(Window(CHAIN, 5)) == [1, 2, 3, 4, 5]
        assert enumerate_window(Window(SUBSETS, 2)) == [(), (1,), (2,), (1, 2)]
        assert enumerate_window(Window(DIV, 6)) == [1, 2, 3, 4, 5, 6]

    def test_divisor_closure_window(self):
        w = Window(DIV, 12, divisor_closure=True)
        assert enumerate_window(w) == [1, 2, 3, 4, 6, 12]
        with pytest.raises(InvalidInput):
            Window(CHAIN, 12, divisor_closure=True)

    def test_multisets_window_tracks_integer_images(self):
        elements = enumerate_window(Window(MULTISETS, 10))
        assert [multiset_to_integer(m) for m in elements] == list(range(1, 11))

    def test_bound_cap(self):
        with pytest.raises(BoundTooLarge):
            enumerate_window(Window(CHAIN, 2000), element_cap=1000)
        with pytest.raises(BoundTooLarge):
            enumerate_window(Window(SUBSETS, 21))

    def test_bad_bounds(self):
        with pytest.raises(InvalidInput):
            enumerate_window(Window(CHAIN, 0))
        with pytest.raises(InvalidInput):
            Window(CHAIN, None)

    @pytest.mark.parametrize(
        "poset,window",
        [
            (DIV, Window(DIV, 30)),
            (CHAIN, Window(CHAIN, 30)),
            (SUBSETS, Window(SUBSETS, 4)),
            (MULTISETS, Window(MULTISETS, 30)),
            (DIV, Window(DIV, 60, divisor_closure=True)),
        ],
    )
    def test_downward_closed(self, poset, window):
        elements = enumerate_window(window)
        inside = set(elements)
        for x in elements:
            assert set(ideal(poset, x)) <= inside

    @pytest.mark.parametrize(
        "poset,window",
        [
            (DIV, Window(DIV, 30)),
            (CHAIN, Window(CHAIN, 30)),
            (SUBSETS, Window(SUBSETS, 4)),
            (MULTISETS, Window(MULTISETS, 30)),
        ],
    )
    def test_canonical_order_is_linear_extension(self, poset, window):
        elements = enumerate_window(window)
        for i, x in enumerate(elements):
            assert leq(poset, bottom(poset), x)
            for y in elements[i + 1 :]:
                assert not (leq(poset, y, x) and y != x)


class TestOrderLaws:
    """Reflexive, antisymmetric, transitive; exhaustive at small scale,
    sampled on larger windows."""

    @pytest.mark.parametrize(
        "poset,window",
        [
            (DIV, Window(DIV, 20)),
            (CHAIN, Window(CHAIN, 20)),
            (SUBSETS, Window(SUBSETS, 3)),
            (MULTISETS, Window(MULTISETS, 16)),
        ],
    )
    def test_exhaustive_small(self, poset, window):
        elements = enumerate_window(window)
        rel = {
            (x, y) for x in elements for y in elements if leq(poset, x, y)
        }
        for x in elements:
            assert (x, x) in rel
        for x, y in rel:
            if x != y:
                assert (y, x) not in rel
        for x, y in rel:
            for z in elements:
                if (y, z) in rel:
                    assert (x, z) in rel

    def test_sampled_large_divisibility(self):
        rng = random.Random(7)
        for _ in range(2000):
            x, y, z = (rng.randint(1, 1000) for _ in range(3))
            if leq(DIV, x, y) and leq(DIV, y, z):
                assert leq(DIV, x, z)
            if x != y and leq(DIV, x, y):
                assert not leq(DIV, y, x)


class TestExplicitPosets:
    def test_valid_chain(self):
        p = load_explicit_poset(
            {"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]]}
        )
        assert leq(p, "a", "c")
        assert not leq(p, "c", "a")
        assert interval(p, "a", "c") == ["a", "b", "c"]
        assert enumerate_window(Window(p)) == ["a", "b", "c"]

    def test_cover_transitivity_not_assumed(self):
        p = load_explicit_poset(
            {"elements": ["a", "b", "c", "d"], "covers": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]}
        )
        assert leq(p, "a", "d")
        assert not leq(p, "b", "c")
        assert interval(p, "a", "d") == ["a", "b", "c", "d"]

    def test_cyclic_covers(self):
        with pytest.raises(CyclicCovers):
            load_explicit_poset({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})
        with pytest.raises(CyclicCovers):
            load_explicit_poset({"elements": ["a"], "covers": [["a", "a"]]})

    def test_no_unique_bottom(self):
        with pytest.raises(NoUniqueBottom):
            load_explicit_poset(
                {"elements": ["a", "b", "c"], "covers": [["a", "c"], ["b", "c"]]}
            )

    def test_duplicate_element(self):
        with pytest.raises(DuplicateElement):
            load_explicit_poset({"elements": ["a", "a"], "covers": []})

    def test_unknown_element_in_cover(self):
        with pytest.raises(UnknownElementInCover):
            load_explicit_poset({"elements": ["a"], "covers": [["a", "b"]]})

    def test_unknown_element_access(self):
        p = load_explicit_poset({"elements": ["a"], "covers": []})
        with pytest.raises(InvalidElement):
            leq(p, "a", "zz")

    def test_random_posets_satisfy_order_laws(self):
        rng = random.Random(99)
        for _ in range(5):
            p = random_explicit_poset(rng, rng.randint(2, 8))
            elements = enumerate_window(Window(p))
            for x in elements:
                assert leq(p, bottom(p), x)
                assert ideal(p, x) == interval(p, bottom(p), x)
            rel = {(x, y) for x in elements for y in elements if leq(p, x, y)}
            for x, y in rel:
                for z in elements:
                    if (y, z) in rel:
                        assert (x, z) in rel


class TestMultisetIsomorphism:
    def test_examples(self):
        assert multiset_to_integer({}) == 1
        assert multiset_to_integer({2: 2, 3: 1}) == 12
        assert multiset_to_integer({2: 3, 3: 2, 5: 1}) == 360
        assert integer_to_multiset(1) == ()
        assert integer_to_multiset(12) == ((2, 2), (3, 1))
        assert integer_to_multiset(97) == ((97, 1),)

    def test_round_trip(self):
        for n in range(1, 2000):
            assert multiset_to_integer(integer_to_multiset(n)) == n

    def test_order_embedding(self):
        for n in range(1, 80):
            for m in range(1, 80):
                divides = m % n == 0
                assert leq(MULTISETS, integer_to_multiset(n), integer_to_multiset(m)) == divides

    def test_rejects_bad_input(self):
        with pytest.raises(InvalidInput):
            integer_to_multiset(0)
        with pytest.raises(InvalidElement):
            multiset_to_integer({4: 1})
        with pytest.raises(InvalidElement):
            multiset_to_integer({2: 0})
        with pytest.raises(InvalidElement):
            multiset_to_integer([(2, 1), (2, 2)])


class TestEncodings:
    @pytest.mark.parametrize(
        "poset,element,text",
        [
            (DIV, 12, "12"),
            (CHAIN, 3, "3"),
            (SUBSETS, (), "{}"),
            (SUBSETS, (1, 3), "{1,3}"),
            (MULTISETS, (), "1"),
            (MULTISETS, ((2, 2), (3, 1)), "2^2*3"),
        ],
    )
    def test_format_parse_round_trip(self, poset, element, text):
        assert poset.format_element(element) == text
        assert poset.parse_element(text) == element

    def test_explicit_identifiers_verbatim(self):
        p = load_explicit_poset({"elements": ["leaf-1"], "covers": []})
        assert p.parse_element("leaf-1") == "leaf-1"
        assert p.format_element("leaf-1") == "leaf-1"

    @pytest.mark.parametrize(
        "poset,text",
        [
            (DIV, "x"),
            (DIV, "-3"),
            (SUBSETS, "1,2"),
            (SUBSETS, "{1,}"),
            (MULTISETS, "6"),
            (MULTISETS, "2^0"),
        ],
    )
    def test_parse_rejects(self, poset, text):
        with pytest.raises(InvalidElement):
            poset.parse_element(text)
