#ifndef BLC_DESCRIPTOR_HPP
#define BLC_DESCRIPTOR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "blc/errors.hpp"

namespace blc {

/// Names one chain construction. The text grammar (whitespace-insensitive):
///
///   atom  := C | LukStd | GodStd | ProdStd | Canc | V | MV(k) | G(k)
///            | Rot(Canc)
///   sum   := atom ("++" atom)*
///   chain := sum | "omega" "*" atom
///
/// `ProdStd` is sugar for `G(2) ++ Canc` (the standard product chain is
/// the two-element chain stacked under the standard cancellative hoop);
/// `V` is sugar for `Rot(Canc)`.
struct Descriptor {
  enum class Kind {
    finite_godel,   // k-element Goedel chain, size = k
    finite_mv,      // k-element Lukasiewicz subchain, size = k
    standard_mv,    // [0,1] with Lukasiewicz operations
    standard_godel, // [0,1] with Goedel operations
    standard_product,
    cancellative,   // (0,1] under multiplication, unbounded
    chang,
    rotation,       // components[0] = inner hoop (must be cancellative)
    ordinal_sum,    // components = summands, left to right
    omega_sum,      // components[0] repeated over all naturals
  };

  Kind kind = Kind::finite_godel;
  unsigned size = 2;  // k for finite chains
  std::vector<Descriptor> components;

  static Descriptor finite_godel(unsigned k) {
    return {Kind::finite_godel, k, {}};
  }
  static Descriptor finite_mv(unsigned k) { return {Kind::finite_mv, k, {}}; }
  static Descriptor standard_mv() { return {Kind::standard_mv, 0, {}}; }
  static Descriptor standard_godel() { return {Kind::standard_godel, 0, {}}; }
  static Descriptor standard_product() {
    return {Kind::standard_product, 0, {}};
  }
  static Descriptor cancellative() { return {Kind::cancellative, 0, {}}; }
  static Descriptor chang() { return {Kind::chang, 0, {}}; }
  static Descriptor rotation(Descriptor inner) {
    return {Kind::rotation, 0, {std::move(inner)}};
  }
  static Descriptor ordinal_sum(std::vector<Descriptor> parts) {
    return {Kind::ordinal_sum, 0, std::move(parts)};
  }
  static Descriptor omega_sum(Descriptor part) {
    return {Kind::omega_sum, 0, {std::move(part)}};
  }

  friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

inline std::string render(const Descriptor& d) {
  using K = Descriptor::Kind;
  switch (d.kind) {
    case K::finite_godel: return "G(" + std::to_string(d.size) + ")";
    case K::finite_mv: return "MV(" + std::to_string(d.size) + ")";
    case K::standard_mv: return "LukStd";
    case K::standard_godel: return "GodStd";
    case K::standard_product: return "ProdStd";
    case K::cancellative: return "Canc";
    case K::chang: return "C";
    case K::rotation:
      return d.components.size() == 1 &&
                     d.components[0].kind == K::cancellative
                 ? "V"
                 : "Rot(" + render(d.components[0]) + ")";
    case K::ordinal_sum: {
      std::string out;
      for (std::size_t i = 0; i < d.components.size(); ++i) {
        if (i) out += " ++ ";
        out += render(d.components[i]);
      }
      return out;
    }
    case K::omega_sum: return "omega*" + render(d.components[0]);
  }
  return "?";
}

namespace detail {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  Descriptor parse() {
    skip_ws();
    Descriptor d = parse_chain();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("trailing input in algebra descriptor", pos_,
                        "end of input");
    return d;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  bool try_literal(std::string_view lit) {
    skip_ws();
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            (text_[pos_] >= 'A' && text_[pos_] <= 'Z')))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned parenthesized_number() {
    if (!try_literal("("))
      throw parse_error("malformed descriptor", pos_, "(");
    skip_ws();
    std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 1000000) throw parse_error("size too large", start, "k <= 10^6");
      ++pos_;
    }
    if (pos_ == start)
      throw parse_error("malformed descriptor", pos_, "integer");
    if (!try_literal(")"))
      throw parse_error("malformed descriptor", pos_, ")");
    return static_cast<unsigned>(v);
  }

  Descriptor parse_chain() {
    skip_ws();
    std::size_t mark = pos_;
    std::string w = word();
    if (w == "omega") {
      if (!try_literal("*"))
        throw parse_error("malformed descriptor", pos_, "* after omega");
      return Descriptor::omega_sum(parse_atom());
    }
    pos_ = mark;
    std::vector<Descriptor> parts;
    parts.push_back(parse_atom());
    while (true) {
      skip_ws();
      if (!try_literal("++")) break;
      parts.push_back(parse_atom());
    }
    if (parts.size() == 1) return parts[0];
    return Descriptor::ordinal_sum(std::move(parts));
  }

  Descriptor parse_atom() {
    skip_ws();
    std::size_t mark = pos_;
    std::string w = word();
    if (w == "C") return Descriptor::chang();
    if (w == "LukStd") return Descriptor::standard_mv();
    if (w == "GodStd") return Descriptor::standard_godel();
    if (w == "ProdStd") return Descriptor::standard_product();
    if (w == "Canc") return Descriptor::cancellative();
    if (w == "V") return Descriptor::rotation(Descriptor::cancellative());
    if (w == "MV") return Descriptor::finite_mv(parenthesized_number());
    if (w == "G") return Descriptor::finite_godel(parenthesized_number());
    if (w == "Rot") {
      if (!try_literal("("))
        throw parse_error("malformed descriptor", pos_, "(");
      Descriptor inner = parse_atom();
      if (!try_literal(")"))
        throw parse_error("malformed descriptor", pos_, ")");
      return Descriptor::rotation(std::move(inner));
    }
    throw parse_error("unknown algebra '" + w + "'", mark,
                      "C, LukStd, GodStd, ProdStd, Canc, V, MV(k), G(k), "
                      "Rot(Canc)");
  }
};

}  // namespace detail

inline Descriptor parse_descriptor(std::string_view text) {
  return detail::DescriptorParser(text).parse();
}

}  // namespace blc

#endif
