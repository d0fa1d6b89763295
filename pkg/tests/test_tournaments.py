from __future__ import annotations

import itertools

from ocn.coloring import verify_oriented_coloring
from ocn.instances import paley7
from ocn.tournaments import (
    PALEY7,
    all_tournaments,
    canonical_form,
    common_out,
    find_homomorphism,
    is_paley_arc,
    nonisomorphic_tournaments,
    tournament_digraph,
    transitive_tournament,
)


def is_tournament(t):
    r = len(t)
    return all((t[u] >> v & 1) != (t[v] >> u & 1) for u, v in itertools.combinations(range(r), 2)) and all(
        not t[u] >> u & 1 for u in range(r)
    )


def test_class_counts():
    assert [len(nonisomorphic_tournaments(r)) for r in range(1, 8)] == [1, 1, 2, 4, 12, 56, 456]


def test_classes_cover_every_labelled_tournament():
    for r in range(1, 6):
        classes = set(nonisomorphic_tournaments(r))
        labelled = list(all_tournaments(r))
        assert len(labelled) == 2 ** (r * (r - 1) // 2)
        assert all(is_tournament(t) for t in labelled)
        assert {canonical_form(t) for t in labelled} == classes


def test_paley():
    assert tournament_digraph(PALEY7) == paley7()
    assert all(out.bit_count() == 3 for out in PALEY7)
    assert is_tournament(PALEY7)
    assert is_paley_arc(0, 1) and is_paley_arc(0, 4) and not is_paley_arc(0, 3)


def test_common_out():
    t = transitive_tournament(4)
    common = common_out(t)
    assert common[0] == 0b1111
    assert common[0b0001] == 0b1110
    assert common[0b0011] == 0b1100
    assert common[0b1000] == 0


def test_find_homomorphism():
    from ocn.instances import cycle, path

    assert find_homomorphism(cycle(3), transitive_tournament(3)) is None
    image = find_homomorphism(path(5), transitive_tournament(3))
    assert image is None
    image = find_homomorphism(cycle(6), PALEY7)
    assert image is not None and verify_oriented_coloring(cycle(6), image)
