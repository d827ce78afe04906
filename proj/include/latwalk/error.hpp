#pragma once

#include <stdexcept>
#include <string>

namespace latwalk {

// Every failure the library can signal deliberately.  Tests match on the code,
// messages are for humans.
enum class errc {
  order_mismatch,      // EGF operands truncated at different orders
  vertex_not_found,    // label lookup failed
  insufficient_window, // truncated window too small for the requested order
  oracle_bound,        // brute-force enumeration refused (order or ball too big)
  not_bipartite,       // even/odd construction on a non-bipartite graph
  shape_mismatch,      // matrix dimensions unusable
  size_bound,          // enumeration cap exceeded (immanants, bipowers)
  invalid_argument,    // out-of-domain scalar argument
  invalid_graph,       // structurally bad graph (undirected loop, bad index)
  not_surjective,      // vertex map misses part of the codomain
  precondition_failed, // semicovering transfer on an unverified map
  divisibility,        // exact integer division had a remainder
  parse_error,         // malformed JSON input
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace latwalk
