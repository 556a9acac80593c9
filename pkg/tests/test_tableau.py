import json

import pytest

from domino_tableaux.tableau import (
    DominoTableau,
    TableauError,
    core_cells,
    deserialize,
    from_json_dict,
    is_young,
    make_domino,
    make_tableau,
    render,
    replace_cells,
    serialize,
    shape_of_cells,
    to_json_dict,
    validate,
)

H_PAIR_C = [(1, ((1, 1), (1, 2))), (2, ((2, 1), (2, 2)))]


def test_make_domino_validation():
    d = make_domino(3, [(1, 2), (1, 1)])
    assert d.cells == ((1, 1), (1, 2))
    assert d.horizontal
    assert not make_domino(1, [(2, 1), (1, 1)]).horizontal
    with pytest.raises(TableauError):
        make_domino(1, [(1, 1), (1, 3)])  # not adjacent
    with pytest.raises(TableauError):
        make_domino(1, [(1, 1), (2, 2)])  # diagonal
    with pytest.raises(TableauError):
        make_domino(0, [(1, 1), (1, 2)])  # label must be positive
    with pytest.raises(TableauError):
        make_domino(1, [(0, 1), (1, 1)])  # out of the quadrant


def test_core():
    assert core_cells("C") == ()
    assert core_cells("B") == ((1, 1),)
    t = make_tableau("B", [(1, ((1, 2), (1, 3)))])
    assert (1, 1) in t.cells()
    assert t.cell_owner()[(1, 1)] == 0
    assert t.shape() == (3,)


def test_shape_and_prefixes():
    t = make_tableau("C", H_PAIR_C)
    assert t.shape() == (2, 2)
    assert t.sub_shape(1) == (2,)
    assert t.sub_shape(0) == ()
    assert shape_of_cells(t.cells()) == (2, 2)
    assert is_young(t.cells())
    assert not is_young({(1, 1), (1, 3)})


def test_overlap_rejected():
    with pytest.raises(TableauError, match="overlap"):
        make_tableau("C", [(1, ((1, 1), (1, 2))), (2, ((1, 2), (1, 3)))])
    with pytest.raises(TableauError):
        # collides with the core square
        make_tableau("B", [(1, ((1, 1), (2, 1)))])


def test_label_contiguity():
    with pytest.raises(TableauError, match="label"):
        make_tableau("C", [(1, ((1, 1), (1, 2))), (3, ((2, 1), (2, 2)))])
    relaxed = make_tableau(
        "C",
        [(1, ((1, 1), (1, 2))), (3, ((2, 1), (2, 2)))],
        require_contiguous=False,
    )
    assert relaxed.labels() == (1, 3)


def test_prefix_young_condition():
    # 2 alone in row 2 before 1 fills row 1 past it: prefix of 1 not a diagram
    with pytest.raises(TableauError):
        make_tableau("C", [(1, ((1, 2), (1, 3))), (2, ((1, 1), (2, 1)))])
    ok, why = validate(
        DominoTableau("C", (make_domino(1, ((1, 2), (1, 3))),)),
        require_contiguous=False,
    )
    assert not ok and "1" in why


def test_validate_is_prefix_shape_chain():
    # independent reformulation: standard iff the sub-shapes form a chain
    # of partitions, each step adding one domino
    from domino_tableaux.insertion import rs
    from domino_tableaux.signed_perm import enumerate_group

    for t in ("C", "B"):
        for w in enumerate_group(2):
            tab = rs(w, t).left
            shapes = [tab.sub_shape(k) for k in range(len(w) + 1)]
            for a, b in zip(shapes, shapes[1:]):
                assert sum(b) - sum(a) == 2
                assert all(x >= y for x, y in zip(b, b[1:]))
                assert all(b[i] >= a[i] for i in range(len(a)))


def test_replace_cells():
    t = make_tableau("C", H_PAIR_C)
    moved = replace_cells(t, {2: ((2, 1), (3, 1))})
    assert moved.shape() == (2, 1, 1)
    assert moved.domino(1) == t.domino(1)


def test_render():
    t = make_tableau("B", [(1, ((1, 2), (1, 3))), (2, ((2, 1), (2, 2)))])
    assert render(t) == "0 1 1\n2 2"


def test_json_round_trip():
    t = make_tableau("C", H_PAIR_C)
    doc = to_json_dict(t)
    assert doc["type"] == "C"
    assert from_json_dict(doc) == t
    assert deserialize(serialize(t)) == t
    # canonical key order
    assert serialize(t) == json.dumps(doc, sort_keys=True)


def test_deserialize_rejects_garbage():
    with pytest.raises((TableauError, ValueError, KeyError)):
        from_json_dict({"type": "Z", "dominoes": []})
    with pytest.raises((TableauError, ValueError, KeyError)):
        deserialize('{"type": "C", "dominoes": [{"label": 1, "cells": [[1, 1]]}]}')
