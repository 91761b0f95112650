#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlap {

enum class ErrorKind {
  out_of_range_vertex,
  empty_hyperedge,
  zero_degree_vertex,
  non_chemical_form,
  empty_subset,
  not_symmetric,
  no_convergence,
  zero_function,
  disconnected_input,
  no_induced_edges,
  too_large,
  bad_parameter,
  connectivity_retry_exhausted,
  parse_error,
  bound_violation,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperlap
