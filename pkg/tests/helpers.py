from arlab.ideals import RingPresentation
from arlab.polynomial import PolynomialRing


def quotient(names, relations=(), weights=None, field=None, order="grevlex"):
    return RingPresentation(PolynomialRing(names, weights, order, field), list(relations))
