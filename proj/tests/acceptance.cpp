// Acceptance suite: runs every top-level requirement end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails. argv[1] must be the path to the blc CLI binary
// (used by the byte-level determinism criterion).

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "blc/chain.hpp"
#include "blc/checker.hpp"
#include "blc/claims.hpp"
#include "blc/embedding.hpp"
#include "blc/formula.hpp"

using namespace blc;

namespace {

std::string g_cli_path;

struct Harness {
  int passed = 0;
  int failed = 0;

  void criterion(int n, const std::string& what,
                 const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    std::printf("criterion %2d: %s — %s%s%s\n", n, ok ? "PASS" : "FAIL",
                what.c_str(), detail.empty() ? "" : "; ", detail.c_str());
    std::fflush(stdout);
    (ok ? passed : failed)++;
  }
};

const std::vector<ClaimResult>& suite_rows() {
  static const std::vector<ClaimResult> rows = run_claims(Config{});
  return rows;
}

using RowPredicate =
    std::function<bool(const ClaimResult&, std::string& why)>;

bool rows_ok(const std::string& claim, std::size_t expect_rows,
             std::string& detail, const RowPredicate& extra = {}) {
  std::size_t seen = 0;
  for (const auto& r : suite_rows()) {
    if (r.claim != claim) continue;
    ++seen;
    if (!r.ok) {
      detail = claim + " on " + r.algebra + ": verdict " + r.verdict +
               " (wanted " + r.expected + ") " + r.note;
      return false;
    }
    if (extra) {
      std::string why;
      if (!extra(r, why)) {
        detail = claim + " on " + r.algebra + ": " + why;
        return false;
      }
    }
  }
  if (seen < expect_rows) {
    detail = claim + ": only " + std::to_string(seen) + " rows, expected " +
             std::to_string(expect_rows);
    return false;
  }
  detail = std::to_string(seen) + " rows";
  return true;
}

std::pair<int, std::string> run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {status, out};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  Harness h;

  h.criterion(1, "BL laws (residuation, divisibility, prelinearity, monoid, "
                 "lattice) on >= 10^4 tuples over >= 9 chains",
              [&](std::string& d) {
                return rows_ok("bl-laws", 9, d,
                               [](const ClaimResult& r, std::string& why) {
                                 if (r.note.rfind("10000 valuations", 0) != 0) {
                                   why = "tuple count: " + r.note;
                                   return false;
                                 }
                                 return true;
                               });
              });

  h.criterion(
      2, "uplus = oplus: MV(2..8) exhaustive, LukStd grid(64)+random(10^4), "
         "Chang indices <= 25, V random(10^4)",
      [&](std::string& d) {
        if (!rows_ok("uplus-oplus", 10, d)) return false;
        for (const auto& r : suite_rows()) {
          if (r.claim != "uplus-oplus" || r.algebra != "LukStd") continue;
          if (r.source.find("grid(64)") == std::string::npos ||
              r.source.find("random(10000") == std::string::npos) {
            d = "LukStd source is " + r.source;
            return false;
          }
        }
        return true;
      });

  h.criterion(3, "uplus = 1 on the cancellative hoop, random(10^4)",
              [&](std::string& d) { return rows_ok("uplus-canc", 1, d); });

  h.criterion(4, "cross-component uplus = join on C ++ LukStd, ProdStd, "
                 "omega*V (>= 10^3 cross pairs each)",
              [&](std::string& d) { return rows_ok("uplus-cross", 3, d); });

  h.criterion(
      5, "cha verdicts: holds on C, V, omega*V, GodStd, ProdStd; fails on "
         "LukStd with witness x=2/5 (lhs 3/5, rhs 0) and on MV(3..8)",
      [&](std::string& d) {
        if (!rows_ok("cha-holds", 5, d)) return false;
        if (!rows_ok("cha-fails", 7, d)) return false;
        for (const auto& r : suite_rows()) {
          if (r.claim != "cha-fails" || r.algebra != "LukStd") continue;
          if (r.witness != "x=2/5" || r.lhs != "3/5" || r.rhs != "0") {
            d = "LukStd witness was {" + r.witness + "} lhs=" + r.lhs +
                " rhs=" + r.rhs;
            return false;
          }
        }
        return true;
      });

  h.criterion(
      6, "on C ++ LukStd: p0 holds, cha fails with a component-1 witness; "
         "cha and its oplus form agree on MV chains and differ there",
      [&](std::string& d) {
        if (!rows_ok("p0-holds", 1, d)) return false;
        if (!rows_ok("cha-vs-oplus", 6, d)) return false;
        for (const auto& r : suite_rows()) {
          if (r.claim != "cha-fails" || r.algebra != "C ++ LukStd") continue;
          if (r.witness.find("c1:") == std::string::npos) {
            d = "witness not in component 1: " + r.witness;
            return false;
          }
          return true;
        }
        d = "no cha-fails row for C ++ LukStd";
        return false;
      });

  h.criterion(7, "over all finite MV-chain sums of size <= 6, cha holds "
                 "exhaustively iff every summand is the 2-chain",
              [&](std::string& d) { return rows_ok("finite-sums-godel", 1, d); });

  h.criterion(
      8, "perfect condition: every sampled element of C and V; fails at "
         "x=3/5 on LukStd (ord 3 vs 2)",
      [&](std::string& d) {
        if (!rows_ok("perfect", 3, d)) return false;
        for (const auto& r : suite_rows()) {
          if (r.claim != "perfect" || r.algebra != "LukStd") continue;
          if (r.note != "ord(x)=3, ord(~x)=2") {
            d = "LukStd note was " + r.note;
            return false;
          }
        }
        return true;
      });

  h.criterion(9, "Chang closed-form implication equals the residuation "
                 "search oracle for all index pairs <= 25",
              [&](std::string& d) { return rows_ok("chang-imp", 1, d); });

  h.criterion(
      10, "embeddings: chang_into_rotation(5,1/2) checks out; the 12-element "
          "Chang fragment embeds into V within denominators <= 16; G(2) "
          "embeds into every bounded chain",
      [&](std::string& d) {
        PartialAlgebra frag = chang_fragment(5);
        Chain v = Chain::make("V");
        EmbeddingMap geometric = chang_into_rotation(5, Rational(1, 2));
        EmbeddingCheck chk = check_embedding(geometric, frag, v);
        if (!chk.ok) {
          d = "geometric map rejected: " + chk.violation;
          return false;
        }
        auto found = find_embedding(frag, v, {16, 16});
        if (!found || !check_embedding(*found, frag, v).ok) {
          d = "search failed on the 12-element fragment";
          return false;
        }
        Chain g2 = Chain::make("G(2)");
        PartialAlgebra two = partial_subalgebra(g2, g2.carrier());
        std::size_t targets = 0;
        for (const char* name : {"G(5)", "MV(6)", "LukStd", "GodStd",
                                 "ProdStd", "C", "V", "C ++ LukStd",
                                 "omega*V"}) {
          Chain target = Chain::make(name);
          auto m = find_embedding(two, target, {4, 4});
          if (!m || !check_embedding(*m, two, target).ok) {
            d = std::string("G(2) failed to embed into ") + name;
            return false;
          }
          ++targets;
        }
        d = "12-element fragment found; G(2) into " +
            std::to_string(targets) + " bounded chains";
        return true;
      });

  h.criterion(
      11, "axiom schemas A1-A7 evaluate to 1 on every bounded chain; INV "
          "fails on G(3) with witness x=1/2",
      [&](std::string& d) {
        if (!rows_ok("axioms", 9, d)) return false;
        if (!rows_ok("inv", 5, d)) return false;
        for (const auto& r : suite_rows()) {
          if (r.claim != "inv" || r.algebra != "G(3)") continue;
          if (r.witness != "x=1/2") {
            d = "G(3) witness was " + r.witness;
            return false;
          }
        }
        return true;
      });

  h.criterion(
      12, "two runs of `suite --machine` produce byte-identical output",
      [&](std::string& d) {
        if (g_cli_path.empty()) {
          d = "no CLI path given (argv[1])";
          return false;
        }
        std::string cmd = "'" + g_cli_path + "' suite --machine 2>/dev/null";
        auto first = run_command(cmd);
        auto second = run_command(cmd);
        if (first.first != 0 || second.first != 0) {
          d = "suite exited nonzero";
          return false;
        }
        if (first.second.empty() || first.second != second.second) {
          d = "outputs differ or are empty";
          return false;
        }
        std::size_t lines = 0;
        for (char ch : first.second)
          if (ch == '\n') ++lines;
        d = std::to_string(lines) + " identical records";
        return true;
      });

  std::printf("RESULT: %d/%d criteria passed\n", h.passed,
              h.passed + h.failed);
  return h.failed == 0 ? 0 : 1;
}
