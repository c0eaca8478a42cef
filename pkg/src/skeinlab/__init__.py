"""Exact Kauffman-bracket evaluation and SO(3) surgery invariants.

The package is layered: ``algebra`` (Laurent polynomials, rational
functions, cyclotomic numbers), ``diagrams`` (planar diagrams, links,
cabling, splicing), ``tl`` (Temperley-Lieb elements and projectors),
``bracket`` (state sum, tangle sweep, colored brackets), ``recoupling``
(closed-form colored-unknot data), ``wrt`` (surgery invariants and
d-sweeps), with ``verify``/``cli`` on top.
"""

from .algebra import (
    CycloNum,
    EvalPoint,
    LaurentPoly,
    RatFunc,
    delta_color,
    evaluate_at,
    quantum_integer,
)
from .bracket import bracket, bracket_state_sum, bracket_tangle_sweep, colored_bracket
from .diagrams import (
    ColoredLink,
    FramedLink,
    PlanarDiagram,
    SurgeryPresentation,
    attach_meridian,
    borromean_fixture,
    braid_closure,
    hopf_fixture,
    unknot_fixture,
)
from .recoupling import (
    OmegaData,
    dim_v_torus,
    hopf_eval,
    meridian_eigenvalue,
    meridian_series,
    omega_data,
    twist_coefficient,
)
from .tl import TLDiagram, TLElement, jones_wenzl
from .wrt import (
    GammaFunction,
    InvariantReport,
    f_mobius,
    gamma_tabulate,
    independence_certificate,
    recolor_check,
    torus_invariant,
    wrt_invariant,
)

__version__ = "0.1.0"
