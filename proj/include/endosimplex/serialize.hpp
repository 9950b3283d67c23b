#pragma once

// JSON views of sets and reports. Members are always written in run-length
// notation and in canonical (lexicographic) order, so output is deterministic.

#include <string>

#include "json.hpp"

#include "endosimplex/endo.hpp"
#include "endosimplex/simplex.hpp"
#include "endosimplex/strata.hpp"
#include "endosimplex/typemap.hpp"

namespace endosimplex {

using json = nlohmann::ordered_json;

inline json members_json(EndoSet const& set) {
  json members = json::array();
  for (auto const& e : set) {
    members.push_back(format_endo(e, Notation::run_length));
  }
  return members;
}

/// {"n": ..., "vertices": [...], "members": ["run-length", ...]}
inline json to_json(EndoSet const& set) {
  json j;
  j["n"] = set.simplex().chain_size();
  j["vertices"] = set.simplex().vertices();
  j["count"] = set.size();
  j["members"] = members_json(set);
  return j;
}

inline json to_json(Witness const& w) {
  json j;
  j["lhs"] = format_endo(w.lhs, Notation::run_length);
  j["rhs"] = format_endo(w.rhs, Notation::run_length);
  j["result"] = format_endo(w.result, Notation::run_length);
  return j;
}

inline json to_json(ClosureReport const& r) {
  json j;
  j["add_closed"] = r.add_closed;
  j["mul_closed"] = r.mul_closed;
  j["left_ideal"] = r.left_ideal;
  j["right_ideal"] = r.right_ideal;
  j["ideal"] = r.ideal;
  json witnesses = json::object();
  for (auto kind : {ClosureKind::add, ClosureKind::mul, ClosureKind::left_ideal,
                    ClosureKind::right_ideal}) {
    if (auto const& w = r.witness(kind)) {
      witnesses[to_string(kind)] = to_json(*w);
    }
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

inline json to_json(PartitionReport const& p) {
  json j;
  j["n"] = p.simplex.chain_size();
  j["vertices"] = p.simplex.vertices();
  json blocks = json::object();
  json census = json::object();
  json block_checks = json::object();
  for (auto const& [label, set] : p.blocks) {
    auto const name = label_string(label, p.simplex);
    blocks[name] = members_json(set);
    census[name] = set.size();
    auto const& c = p.checks.at(label);
    json entry = to_json(c.closure);
    if (c.with_idempotent_type) {
      entry["with_idempotent_type"] = to_json(*c.with_idempotent_type);
    }
    entry["contract_met"] = c.contract_met;
    block_checks[name] = std::move(entry);
  }
  j["blocks"] = std::move(blocks);
  j["census"] = std::move(census);
  j["checks"] = {{"disjoint", p.disjoint},
                 {"covering", p.covering},
                 {"blocks", std::move(block_checks)},
                 {"all_contracts_met", p.all_contracts_met()}};
  return j;
}

}  // namespace endosimplex
