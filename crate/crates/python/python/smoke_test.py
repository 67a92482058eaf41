"""Smoke test for the apolar_lab extension module."""

import apolar_lab as al

f = al.Polynomial("y1^3 + y2^2 + y3^2")
assert f.nvars == 3 and f.degree == 3
assert f.hilbert() == [1, 3, 1, 1]
assert f.capital_degree() == 1
assert sorted(al.annihilator("y1*y2")) == ["x1^2", "x2^2"]

d = al.decompose("y1^4 + y1*y2^2 + y3^2")
assert d.hilbert == [1, 3, 2, 1, 1]
assert [sum(col) for col in zip(*[r + [0] * (len(d.hilbert) - len(r)) for r in d.rows])] == d.hilbert

assert al.betti("y1^2 + y2^2", pmax=6) == [1, 2, 3, 4, 5, 6, 7]
p = al.predict("y1^3 + y2^2 + y3^2", pmax=5)
assert p.closed_form == "1/(1-3z+z^2)" and p.consistent
assert p.oracle == [1, 3, 8, 21, 55, 144]

v = al.classify([1, 5, 4, 4, 1])
assert v.column_shape and v.any

assert len(al.enumerate(3)) == 40
passed, trials, summary = al.verify("split-sum", trials=5, seed=7)
assert passed == trials == 5, summary

try:
    al.hilbert("y1^")
except ValueError:
    pass
else:
    raise AssertionError("parse error not raised")

print("ok:", summary)
