from acbsoliton.scalars import Scalar, parse_expression


def sc(value, m):
    """Scalar in the parameter set of manifold ``m``."""
    if isinstance(value, Scalar):
        return value
    return parse_expression(str(value), m.params)


def assert_sparse(tensor, expected, m):
    """Exact equality of every component, zeros included."""
    got = {idx: v for idx, v in tensor.nonzero()}
    assert set(got) == set(expected), (sorted(set(got) ^ set(expected)))
    for idx, v in expected.items():
        assert got[idx] == sc(v, m), (idx, str(got[idx]), v)
