#include "hyperlap/error.hpp"

namespace hyperlap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::out_of_range_vertex: return "OutOfRangeVertex";
    case ErrorKind::empty_hyperedge: return "EmptyHyperedge";
    case ErrorKind::zero_degree_vertex: return "ZeroDegreeVertex";
    case ErrorKind::non_chemical_form: return "NonChemicalForm";
    case ErrorKind::empty_subset: return "EmptySubset";
    case ErrorKind::not_symmetric: return "NotSymmetric";
    case ErrorKind::no_convergence: return "NoConvergence";
    case ErrorKind::zero_function: return "ZeroFunction";
    case ErrorKind::disconnected_input: return "DisconnectedInput";
    case ErrorKind::no_induced_edges: return "NoInducedEdges";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::bad_parameter: return "BadParameter";
    case ErrorKind::connectivity_retry_exhausted: return "ConnectivityRetryExhausted";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::bound_violation: return "BoundViolation";
  }
  return "Unknown";
}

}  // namespace hyperlap
