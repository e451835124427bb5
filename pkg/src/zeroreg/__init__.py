"""Exact-arithmetic toolkit for finite subschemes of projective space.

Core capabilities:

* exact linear algebra over Q and prime fields (``exactalg``);
* curvilinear germs and finite schemes, spans, subscheme enumeration,
  secant-line detection (``scheme``);
* Hilbert functions, k-normality, Castelnuovo-Mumford regularity of
  finite schemes and the secant-driven normality thresholds
  (``normality``);
* separator construction for near-collinear point configurations and
  restricted form-space recipes (``separation``);
* linear projections: scheme fibers, rational-curve fibers, fiber
  classification, Mather-type fiber-multiplicity checks (``projection``);
* closed-form regularity bound arithmetic (``bounds``);
* a randomized verification harness plus a JSON command line
  (``harness``, ``cli``).
"""

from zeroreg.exactalg import QQ, Matrix, prime_field

__all__ = ["QQ", "Matrix", "prime_field"]
__version__ = "0.1.0"
