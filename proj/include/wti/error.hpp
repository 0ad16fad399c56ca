#ifndef WTI_ERROR_HPP
#define WTI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wti {

/// Every failure the library can raise. Construction errors name the
/// offending element in the message; preconditions map one-to-one.
enum class errc {
  duplicate_vertex,
  duplicate_edge,
  self_loop,
  unknown_endpoint,
  nonpositive_weight,
  unknown_vertex,
  not_a_tree,
  not_a_path,
  isolated_vertex,
  not_independent,
  not_in_neighborhood,
  not_increasing_tree,
  multiple_roots,
  not_a_cover,
  invalid_power,
  overflow,
  ambient_mismatch,
  zero_ideal,
  unit_ideal,
  search_space_too_large,
  trivial_tree,
  too_many_vertices,
  parse_error,
  invalid_argument,
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

} // namespace wti

#endif
