"""Spectra of splitting and join constructions on k-uniform hypergraphs."""

from .closed_forms import (
    JoinCubic,
    NNSQuadratic,
    NotRegularError,
    SplitFactors,
    nns_energy_formula,
    nns_spectrum_formula,
    ns_m_energy_formula,
    ns_m_spectrum_formula,
    ns_pairing_check,
    nsm_det_radius_relations,
    sjoin_spectrum_formula,
    vjoin_spectrum_formula,
)
from .constructions import (
    VertexLayout,
    nns,
    nns_matrix,
    ns_m,
    ns_m_matrix,
    s_join,
    sjoin_matrix,
    v_join,
    vjoin_matrix,
)
from .fileformat import ParseError, format_hypergraph, parse_hypergraph, read_hypergraph
from .harness import (
    CospectralCatalog,
    VerificationReport,
    search_cospectral,
    singular_family,
    verify,
)
from .hypergraph import (
    DegreeProfile,
    Hypergraph,
    InvalidHypergraph,
    are_isomorphic,
    complete_hypergraph,
    degree_profile,
    enumerate_regular,
    fig2a,
    fig3,
    find_isomorphism,
    is_neighbor,
    validate,
)
from .linalg import (
    CharPoly,
    Spectrum,
    adjacency_matrix,
    are_cospectral,
    char_poly,
    eigenvalues,
    energy,
    exact_det,
    exact_nullity,
    kronecker,
    spectral_radius,
)

__version__ = "0.1.0"
