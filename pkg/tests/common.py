import pytest

from pymatchstick.catalog import catalog_entries, MATCHSTICK, PATTERN, DETAIL

graph_entry_ids = [e.entry_id for e in catalog_entries() if e.kind in (MATCHSTICK, PATTERN, DETAIL)]
matchstick_entry_ids = [e.entry_id for e in catalog_entries() if e.kind == MATCHSTICK]
pattern_entry_ids = [e.entry_id for e in catalog_entries() if e.kind == PATTERN]
stub_entry_ids = [e.entry_id for e in catalog_entries() if e.is_stub]
asymmetric_entry_ids = ["fig4", "fig5", "fig6", "fig7", "fig8", "fig9"]


def run_catalog_entries(*entry_ids):
    """
    Parametrize a test over catalog ids, by default every bundled graph.
    """
    if len(entry_ids) == 1 and callable(entry_ids[0]):
        return pytest.mark.parametrize("entry_id", graph_entry_ids)(entry_ids[0])
    if not entry_ids:
        entry_ids = graph_entry_ids
    return lambda fn: pytest.mark.parametrize("entry_id", list(entry_ids))(fn)


def ok_(b, msg=None):
    if msg is None:
        assert b
    else:
        assert b, msg


def eq_(x, y, msg=None):
    if msg is None:
        assert x == y
    else:
        assert x == y, msg


def neq_(x, y, msg=None):
    if msg is None:
        assert x != y
    else:
        assert x != y, msg


def gt_(x, y, msg=None):
    if msg is None:
        assert x > y
    else:
        assert x > y, msg


def gte_(x, y, msg=None):
    if msg is None:
        assert x >= y
    else:
        assert x >= y, msg


def lt_(x, y, msg=None):
    if msg is None:
        assert x < y
    else:
        assert x < y, msg


def lte_(x, y, msg=None):
    if msg is None:
        assert x <= y
    else:
        assert x <= y, msg


def almost_eq_(x, y, tol, msg=None):
    if msg is None:
        assert abs(x - y) <= tol, "%r != %r within %g" % (x, y, tol)
    else:
        assert abs(x - y) <= tol, msg
