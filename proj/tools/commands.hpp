#pragma once

// Subcommand bodies for the endosimplex CLI. Each takes its parsed options and
// the two output streams and returns the process exit code, so tests can drive
// them without spawning a process.

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "endosimplex/endosimplex.hpp"

namespace endosimplex::cli {

enum exit_code : int { ok = 0, check_failed = 1, usage = 2 };

struct SimplexArgs {
  std::size_t n = 0;
  std::vector<element> vertices;
  std::uint64_t cap = default_enumeration_cap;
};

inline std::string join(std::vector<element> const& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out;
}

inline int cmd_enumerate(SimplexArgs const& a, std::string const& format, bool count_only,
                         std::ostream& out, std::ostream& err) {
  if (format != "json" && format != "tuple" && format != "runlength") {
    err << "error: unknown format '" << format << "' (json, tuple, runlength)\n";
    return usage;
  }
  try {
    auto const s = make_simplex(a.n, a.vertices);
    if (count_only) {
      auto const count = cardinality(s);
      if (format == "json") {
        json j;
        j["n"] = s.chain_size();
        j["vertices"] = s.vertices();
        j["count"] = count;
        out << j.dump(2) << '\n';
      } else {
        out << count << '\n';
      }
      return ok;
    }
    auto const set = enumerate(s, a.cap);
    if (format == "json") {
      out << to_json(set).dump(2) << '\n';
      return ok;
    }
    err << "# n=" << s.chain_size() << " vertices=" << join(s.vertices())
        << " count=" << set.size() << '\n';
    auto const style = format == "tuple" ? Notation::tuple : Notation::run_length;
    for (auto const& e : set) {
      out << format_endo(e, style) << '\n';
    }
    return ok;
  } catch (size_limit_exceeded const& e) {
    err << "error: " << e.what() << " (raise --cap to override)\n";
    return usage;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

inline int cmd_classify(SimplexArgs const& a, std::ostream& out, std::ostream& err) {
  try {
    auto const s = make_simplex(a.n, a.vertices);
    auto const report = partition(s, a.cap);
    out << to_json(report).dump(2) << '\n';
    if (!report.disjoint || !report.covering || !report.all_contracts_met()) {
      err << "partition checks failed\n";
      return check_failed;
    }
    return ok;
  } catch (size_limit_exceeded const& e) {
    err << "error: " << e.what() << " (raise --cap to override)\n";
    return usage;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

inline int cmd_verify(std::string const& suite_name, unsigned max_n, std::uint64_t seed,
                      bool timing, std::ostream& out, std::ostream& err) {
  auto const suite = parse_suite(suite_name);
  if (!suite) {
    err << "error: unknown suite '" << suite_name
        << "' (axioms, simplex, strata, typemap, counts, all)\n";
    return usage;
  }
  if (max_n < 1 || max_n > max_verify_n) {
    err << "error: --max-n must lie in 1.." << max_verify_n << '\n';
    return usage;
  }
  auto const report = verify(*suite, max_n, seed, [&](ClaimResult const& c) {
    err << (c.informational ? "info " : c.passed ? "pass " : "FAIL ") << c.id << '\n';
  });
  out << to_json(report, timing).dump(2) << '\n';
  err << report.passed() << " passed, " << report.failed() << " failed\n";
  return report.ok() ? ok : check_failed;
}

namespace detail {

inline Endo apply(std::string const& op, Endo const& x, Endo const& y) {
  return op == "add" ? add(x, y) : compose(x, y);
}

// Greedy generating set: scan members in canonical order, keeping each one not
// already produced by the ones kept so far.
inline std::vector<Endo> generators(EndoSet const& set, std::string const& op) {
  std::vector<Endo> gens;
  std::set<Endo> reached;
  for (auto const& e : set) {
    if (reached.count(e)) {
      continue;
    }
    gens.push_back(e);
    reached.insert(e);
    std::vector<Endo> frontier(reached.begin(), reached.end());
    while (!frontier.empty()) {
      std::vector<Endo> next;
      std::vector<Endo> const snapshot(reached.begin(), reached.end());
      for (auto const& x : frontier) {
        for (auto const& y : snapshot) {
          for (auto const& r : {apply(op, x, y), apply(op, y, x)}) {
            if (reached.insert(r).second) {
              next.push_back(r);
            }
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace detail

inline int cmd_cayley(SimplexArgs const& a, std::string const& op, std::string const& format,
                      std::ostream& out, std::ostream& err) {
  if (op != "add" && op != "mul") {
    err << "error: unknown op '" << op << "' (add, mul)\n";
    return usage;
  }
  if (format != "csv" && format != "dot") {
    err << "error: unknown format '" << format << "' (csv, dot)\n";
    return usage;
  }
  try {
    auto const s = make_simplex(a.n, a.vertices);
    auto const set = enumerate(s, a.cap);
    auto const label = [](Endo const& e) { return format_endo(e, Notation::run_length); };
    if (format == "csv") {
      out << (op == "add" ? "+" : "*");
      for (auto const& y : set) out << ',' << label(y);
      out << '\n';
      for (auto const& x : set) {
        out << label(x);
        for (auto const& y : set) out << ',' << label(detail::apply(op, x, y));
        out << '\n';
      }
      return ok;
    }
    auto const gens = detail::generators(set, op);
    out << "digraph cayley {\n";
    out << "  // edges x -> x " << (op == "add" ? "+" : "*") << " g for generators g\n";
    for (std::size_t i = 0; i < set.size(); ++i) {
      out << "  e" << i << " [label=\"" << label(set[i]) << "\"];\n";
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (auto const& g : gens) {
        auto const r = detail::apply(op, set[i], g);
        auto const j = std::lower_bound(set.begin(), set.end(), r) - set.begin();
        out << "  e" << i << " -> e" << j << " [label=\"" << label(g) << "\"];\n";
      }
    }
    out << "}\n";
    return ok;
  } catch (size_limit_exceeded const& e) {
    err << "error: " << e.what() << " (raise --cap to override)\n";
    return usage;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace endosimplex::cli
