// blc — exact workbench for BL-chains: evaluate formulas, check
// identities, search for counterexamples, run the claims suite, and
// search for partial-subalgebra embeddings.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "blc/chain.hpp"
#include "blc/checker.hpp"
#include "blc/claims.hpp"
#include "blc/embedding.hpp"
#include "blc/formula.hpp"
#include "blc/term.hpp"

namespace {

using blc::Chain;
using blc::Config;
using blc::Element;
using blc::Equation;
using blc::Valuation;
using blc::Verdict;

/// One structured record per result line; machine mode prints it as a
/// JSON object with a stable field set. Timing is deliberately absent
/// from machine mode so identical runs produce identical bytes.
struct Record {
  std::string claim, algebra, source, verdict, witness, lhs, rhs;
};

void emit_machine(const Record& r) {
  nlohmann::ordered_json j;
  auto field = [&](const char* key, const std::string& value) {
    if (value.empty())
      j[key] = nullptr;
    else
      j[key] = value;
  };
  field("claim", r.claim);
  field("algebra", r.algebra);
  field("source", r.source);
  field("verdict", r.verdict);
  field("witness", r.witness);
  field("lhs", r.lhs);
  field("rhs", r.rhs);
  std::cout << j.dump() << "\n";
}

Record record_of_verdict(const std::string& claim, const Chain& c,
                         const Verdict& v) {
  Record r;
  r.claim = claim;
  r.algebra = c.name();
  r.source = v.source;
  if (v.holds)
    r.verdict = v.decisive ? "holds" : "holds-up-to-source";
  else
    r.verdict = "fails";
  if (!v.holds) {
    r.witness = v.witness.str();
    if (v.lhs) r.lhs = render(*v.lhs);
    if (v.rhs) r.rhs = render(*v.rhs);
  }
  return r;
}

void print_verdict_human(const std::string& what, const Chain& c,
                         const Verdict& v) {
  std::cout << what << " on " << c.name() << ": " << v.str() << "\n";
}

Equation equation_from_item(const std::string& item) {
  if (item.find('=') != std::string::npos) return blc::parse_equation(item);
  return blc::named_equation(item);
}

std::vector<Element> parse_carrier_list(const Chain& c,
                                        const std::string& text) {
  std::vector<Element> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) {
      std::size_t dots = item.find("..");
      if (dots != std::string::npos) {
        // Chang-style range a0..a5 / b0..b5
        std::string lo = item.substr(0, dots), hi = item.substr(dots + 2);
        if (lo.size() < 2 || hi.size() < 2 || lo[0] != hi[0] ||
            (lo[0] != 'a' && lo[0] != 'b'))
          throw blc::parse_error("bad element range '" + item + "'", pos,
                                 "a<n>..a<m> or b<n>..b<m>");
        std::uint64_t from = std::stoull(lo.substr(1));
        std::uint64_t to = std::stoull(hi.substr(1));
        if (to < from) std::swap(from, to);
        for (std::uint64_t i = from; i <= to; ++i)
          out.push_back(c.parse_element(lo.substr(0, 1) + std::to_string(i)));
      } else {
        out.push_back(c.parse_element(item));
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw blc::argument_error("empty carrier specification");
  return out;
}

int cmd_eval(const Config& cfg, const std::string& algebra,
             const std::string& formula_text,
             const std::vector<std::string>& bindings) {
  Chain c = Chain::make(algebra);
  blc::Formula f = blc::parse_formula(formula_text);
  Valuation v;
  for (const auto& b : bindings) {
    std::size_t eq = b.find('=');
    if (eq == std::string::npos)
      throw blc::argument_error("binding '" + b + "' is not var=element");
    v.set(b.substr(0, eq), c.parse_element(b.substr(eq + 1)));
  }
  Element result = blc::evaluate(f, c, v);
  if (cfg.machine) {
    Record r;
    r.claim = "eval";
    r.algebra = c.name();
    r.source = v.str();
    r.verdict = "value";
    r.lhs = render(result);
    emit_machine(r);
  } else {
    std::cout << render(result) << "\n";
  }
  return 0;
}

int cmd_check(const Config& cfg, const std::string& algebra,
              const std::string& item) {
  Chain c = Chain::make(algebra);
  Equation e = equation_from_item(item);
  Verdict v = blc::check_equation(e, c, blc::canonical_source(c, e, cfg));
  if (cfg.machine)
    emit_machine(record_of_verdict(e.name, c, v));
  else
    print_verdict_human(e.name + ": " + e.str(), c, v);
  return v.holds ? 0 : 1;
}

int cmd_counterexample(const Config& cfg, const std::string& algebra,
                       const std::string& item) {
  Chain c = Chain::make(algebra);
  Equation e = equation_from_item(item);
  blc::SearchBudget budget;
  budget.denom_max = cfg.denom_bound;
  budget.chang_max = cfg.chang_index_bound;
  Verdict v = blc::find_counterexample(e, c, budget);
  if (cfg.machine) {
    Record r = record_of_verdict(e.name, c, v);
    r.claim = "counterexample:" + e.name;
    emit_machine(r);
  } else if (v.holds) {
    std::cout << "no counterexample to " << e.name << " on " << c.name()
              << " (" << v.str() << ")\n";
  } else {
    std::cout << "counterexample to " << e.name << " on " << c.name() << ": {"
              << v.witness.str() << "} lhs=" << render(*v.lhs)
              << " rhs=" << render(*v.rhs) << "\n";
  }
  return v.holds ? 0 : 1;
}

int cmd_suite(const Config& cfg) {
  auto results = blc::run_claims(cfg);
  if (cfg.machine) {
    for (const auto& r : results) {
      Record rec;
      rec.claim = r.claim;
      rec.algebra = r.algebra;
      rec.source = r.source;
      rec.verdict =
          r.verdict + (r.ok ? "" : " [UNEXPECTED: wanted " + r.expected + "]");
      rec.witness = r.witness;
      rec.lhs = r.lhs;
      rec.rhs = r.rhs;
      emit_machine(rec);
    }
  } else {
    std::printf("%-18s %-22s %-8s %-9s %-3s %6s  %s\n", "claim", "algebra",
                "verdict", "expected", "ok", "ms", "detail");
    for (const auto& r : results) {
      std::string detail = r.note;
      if (!r.witness.empty()) {
        detail += detail.empty() ? "" : "; ";
        detail += "witness {" + r.witness + "}";
        if (!r.lhs.empty()) detail += " lhs=" + r.lhs + " rhs=" + r.rhs;
      }
      std::printf("%-18s %-22s %-8s %-9s %-3s %6lld  %s\n", r.claim.c_str(),
                  r.algebra.c_str(), r.verdict.c_str(), r.expected.c_str(),
                  r.ok ? "yes" : "NO", static_cast<long long>(r.elapsed_ms),
                  detail.c_str());
    }
    std::size_t bad = 0;
    for (const auto& r : results)
      if (!r.ok) ++bad;
    std::printf("%zu rows, %zu unexpected\n", results.size(), bad);
  }
  return blc::all_ok(results) ? 0 : 1;
}

int cmd_embed(const Config& cfg, const std::string& source,
              const std::string& carrier_text, const std::string& target) {
  Chain src = Chain::make(source);
  Chain tgt = Chain::make(target);
  blc::PartialAlgebra p =
      blc::partial_subalgebra(src, parse_carrier_list(src, carrier_text));
  blc::EmbeddingBudget budget{cfg.denom_bound, cfg.chang_index_bound};
  auto m = blc::find_embedding(p, tgt, budget);
  if (cfg.machine) {
    Record r;
    r.claim = "embed";
    r.algebra = src.name() + " -> " + tgt.name();
    r.source = "grid(denominators<=" + std::to_string(budget.denom_bound) +
               ",indices<=" + std::to_string(budget.index_bound) + ")";
    r.verdict = m ? "found" : "not-found-up-to-budget";
    if (m) r.witness = m->str(p);
    emit_machine(r);
  } else if (m) {
    for (std::size_t i = 0; i < p.size(); ++i)
      std::cout << render(p.carrier[i]) << " -> " << render(m->image[i])
                << "\n";
  } else {
    std::cout << "no embedding of the " << p.size() << "-element fragment of "
              << src.name() << " into " << tgt.name()
              << " up to the candidate grid (denominators<="
              << budget.denom_bound << ", indices<=" << budget.index_bound
              << ")" << (tgt.finite() ? "; target finite: this is final" : "")
              << "\n";
  }
  return m ? 0 : 1;
}

int cmd_algebra_list(const Config& cfg) {
  struct Entry {
    const char* name;
    const char* what;
  };
  const Entry entries[] = {
      {"MV(k)", "k-element Lukasiewicz chain {0, 1/(k-1), ..., 1}"},
      {"G(k)", "k-element Goedel chain"},
      {"LukStd", "standard MV chain on [0,1]"},
      {"GodStd", "standard Goedel chain on [0,1]"},
      {"ProdStd", "standard product chain, realized as G(2)-as-MV ++ Canc"},
      {"Canc", "standard cancellative hoop (0,1] under multiplication"},
      {"C", "Chang's MV-chain {b0 < b1 < ... < a1 < a0}"},
      {"V", "disconnected rotation of Canc (= Rot(Canc))"},
      {"Rot(Canc)", "disconnected rotation of a cancellative hoop"},
      {"A ++ B ++ ...", "ordinal sum, first summand bounded"},
      {"omega*V", "ordinal sum of countably many copies of V"},
  };
  if (cfg.machine) {
    for (const auto& e : entries) {
      Record r;
      r.claim = "algebra";
      r.algebra = e.name;
      r.verdict = e.what;
      emit_machine(r);
    }
  } else {
    for (const auto& e : entries) std::printf("%-14s %s\n", e.name, e.what);
  }
  return 0;
}

int cmd_algebra_describe(const Config& cfg, const std::string& descriptor) {
  Chain c = Chain::make(descriptor);
  std::string shape;
  if (c.is_omega())
    shape = "omega sum of " + render(c.component_atom(0));
  else if (c.is_sum()) {
    shape = "ordinal sum of " + std::to_string(c.component_count()) +
            " components:";
    for (std::size_t i = 0; i < c.component_count(); ++i)
      shape += " " + render(c.component_atom(i));
  } else {
    shape = "atomic";
  }
  std::string syntax;
  if (c.is_sum())
    syntax = "c<i>:<payload> per component, plus 0 and 1";
  else
    switch (c.descriptor_atom().kind) {
      case blc::Descriptor::Kind::chang: syntax = "a<n>, b<n>, 0, 1"; break;
      case blc::Descriptor::Kind::rotation:
        syntax = "pos <p/q>, neg <p/q>, 0, 1";
        break;
      case blc::Descriptor::Kind::cancellative: syntax = "p/q in (0,1]"; break;
      default: syntax = "p/q in [0,1]"; break;
    }
  if (cfg.machine) {
    Record r;
    r.claim = "describe";
    r.algebra = c.name();
    r.source = shape;
    r.verdict = c.bounded() ? "bounded" : "unbounded";
    r.witness = syntax;
    if (c.finite()) r.lhs = std::to_string(c.carrier().size());
    emit_machine(r);
    return 0;
  }
  std::cout << "algebra:  " << c.name() << "\n"
            << "shape:    " << shape << "\n"
            << "bounded:  " << (c.bounded() ? "yes" : "no") << "\n"
            << "finite:   "
            << (c.finite()
                    ? "yes (" + std::to_string(c.carrier().size()) +
                          " elements)"
                    : "no")
            << "\n"
            << "elements: " << syntax << "\n"
            << "top:      " << render(c.top()) << "\n";
  if (c.bounded()) std::cout << "bottom:   " << render(c.bottom()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "blc — exact workbench for BL-chains: Chang's chain, standard MV / "
      "Goedel / product chains, cancellative hoops, disconnected rotations "
      "and ordinal sums, with identity checking, counterexample search and "
      "partial-embedding search over exact rational arithmetic"};
  app.require_subcommand(1);

  Config cfg;
  std::string seed_text = "0xB1C";
  app.add_option("--seed", seed_text,
                 "PRNG seed for random sources (default 0xB1C)");
  app.add_option("--samples", cfg.sample_count,
                 "random sample count per claim (default 10000)");
  app.add_option("--denom-bound", cfg.denom_bound,
                 "denominator bound for grids and searches (default 64)");
  app.add_option("--chang-bound", cfg.chang_index_bound,
                 "index bound for Chang enumeration (default 50)");
  app.add_flag("--machine", cfg.machine,
               "line-delimited structured output (reproducible)");

  std::string algebra, formula_text, item, source, carrier, target,
      descriptor;
  std::vector<std::string> bindings;

  CLI::App* eval = app.add_subcommand(
      "eval",
      "evaluate a formula at a valuation: eval ALGEBRA FORMULA "
      "[var=element ...]");
  eval->add_option("algebra", algebra)->required();
  eval->add_option("formula", formula_text)->required();
  eval->add_option("bindings", bindings);

  CLI::App* check = app.add_subcommand(
      "check",
      "check a named identity (cha, p0, inv, cha-oplus, a1..a7) or "
      "'lhs = rhs' on an algebra");
  check->add_option("algebra", algebra)->required();
  check->add_option("item", item)->required();

  CLI::App* cex = app.add_subcommand(
      "counterexample",
      "iterative-deepening counterexample search (denominators ascend up to "
      "--denom-bound / --chang-bound within a fixed work ceiling; the "
      "verdict reports the depth actually reached)");
  cex->add_option("algebra", algebra)->required();
  cex->add_option("item", item)->required();

  CLI::App* suite = app.add_subcommand(
      "suite",
      "run the full claims suite; exit 0 iff all expected verdicts "
      "(including expected failures) are met");

  CLI::App* embed = app.add_subcommand(
      "embed",
      "search for a partial-subalgebra embedding: embed SOURCE CARRIER "
      "TARGET (carrier: comma list, Chang ranges a0..a5)");
  embed->add_option("source", source)->required();
  embed->add_option("carrier", carrier)->required();
  embed->add_option("target", target)->required();

  CLI::App* alg = app.add_subcommand("algebra", "catalogue of chains");
  alg->require_subcommand(1);
  CLI::App* alg_list = alg->add_subcommand("list", "list the descriptor grammar");
  CLI::App* alg_desc = alg->add_subcommand("describe", "describe one chain");
  alg_desc->add_option("descriptor", descriptor)->required();

  // global flags may follow the subcommand (blc suite --machine)
  for (CLI::App* sub : {eval, check, cex, suite, embed, alg}) sub->fallthrough();
  alg_list->fallthrough();
  alg_desc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.seed = std::stoull(seed_text, nullptr, 0);
  } catch (const std::exception&) {
    std::cerr << "error: bad --seed value '" << seed_text << "'\n";
    return 2;
  }

  try {
    if (app.got_subcommand(eval))
      return cmd_eval(cfg, algebra, formula_text, bindings);
    if (app.got_subcommand(check)) return cmd_check(cfg, algebra, item);
    if (app.got_subcommand(cex)) return cmd_counterexample(cfg, algebra, item);
    if (app.got_subcommand(suite)) return cmd_suite(cfg);
    if (app.got_subcommand(embed))
      return cmd_embed(cfg, source, carrier, target);
    if (app.got_subcommand(alg)) {
      if (alg->got_subcommand(alg_list)) return cmd_algebra_list(cfg);
      if (alg->got_subcommand(alg_desc))
        return cmd_algebra_describe(cfg, descriptor);
    }
  } catch (const blc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
