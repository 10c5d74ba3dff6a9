#ifndef BLC_VALUATION_HPP
#define BLC_VALUATION_HPP

#include <map>
#include <string>

#include "blc/element.hpp"
#include "blc/errors.hpp"

namespace blc {

/// Finite assignment of chain elements to variable names.
struct Valuation {
  std::map<std::string, Element> assignments;

  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const std::string, Element>> init)
      : assignments(init) {}

  const Element& at(const std::string& name) const {
    auto it = assignments.find(name);
    if (it == assignments.end())
      throw evaluation_error("unassigned variable '" + name + "'");
    return it->second;
  }

  void set(const std::string& name, Element e) {
    assignments[name] = std::move(e);
  }

  bool has(const std::string& name) const {
    return assignments.count(name) != 0;
  }

  std::string str() const {
    std::string out;
    for (const auto& [name, value] : assignments) {
      if (!out.empty()) out += ", ";
      out += name + "=" + render(value);
    }
    return out;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

}  // namespace blc

#endif
