"""lagdouble: exact-arithmetic Lagrangian subalgebras of the double g x g.

Construction, verification, classification and integrability testing of
Lagrangian subalgebras of g x g for complex reductive Lie algebras, all
over exact fields (Q, Q(i), Q(sqrt(d))(i)).
"""

__version__ = "0.1.0"
