#ifndef BLC_ERRORS_HPP
#define BLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blc {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An element value does not belong to the chain's encoding.
struct encoding_error : error {
  using error::error;
};

// Operation requires structure the chain lacks (e.g. negation on an
// unbounded hoop).
struct unsupported_operation : error {
  using error::error;
};

// Invalid chain descriptor (unbounded first summand, rotation of a
// non-cancellative hoop, ...).
struct construction_error : error {
  using error::error;
};

// Bad plain argument (n = 0 exponent, ratio outside (0,1), ...).
struct argument_error : error {
  using error::error;
};

// Valuation source incompatible with the chain (exhaustive on an
// infinite carrier, Chang indices on a rational chain, ...).
struct strategy_error : error {
  using error::error;
};

// Unassigned variable during evaluation.
struct evaluation_error : error {
  using error::error;
};

// Text input rejected; carries the byte offset and what was expected.
struct parse_error : error {
  std::size_t position;
  std::string expected;

  parse_error(const std::string& what, std::size_t pos, std::string expect)
      : error(what + " at position " + std::to_string(pos) +
              (expect.empty() ? "" : " (expected " + expect + ")")),
        position(pos),
        expected(std::move(expect)) {}
};

}  // namespace blc

#endif
