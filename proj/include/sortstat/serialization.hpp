#pragma once

// JSON encodings shared by the command line tool and the check reports.
//
//   matching            {"n": 3, "edges": [[1,4],[2,3],[5,6]]}
//   bicolored matching  {"n": 2, "edges": [[1,3,"r"],[2,4,"b"]]}
//   dyck path           "UUDD"
//   restriction         [2,3,3]
//   permutation         "6571342" or "-5,1,3,-4,-2"
//   polynomial          its canonical string form
//
// Edges are listed by increasing opener, matching Matching::edges().

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sortstat/bicolored.hpp"
#include "sortstat/dyck.hpp"
#include "sortstat/matching.hpp"
#include "sortstat/permutation.hpp"
#include "sortstat/polynomial.hpp"

namespace sortstat {

inline void to_json(nlohmann::json& j, const Matching& m) {
  j = nlohmann::json{{"n", m.blocks()}, {"edges", m.edges()}};
}

inline void from_json(const nlohmann::json& j, Matching& m) {
  const int n = j.at("n").get<int>();
  const auto edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
  m = Matching::from_edges(n, edges);
}

inline void to_json(nlohmann::json& j, const BicoloredMatching& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [o, c, color] : m.edges())
    edges.push_back({o, c, color == Color::Blue ? "b" : "r"});
  j = nlohmann::json{{"n", m.blocks()}, {"edges", std::move(edges)}};
}

inline void from_json(const nlohmann::json& j, BicoloredMatching& m) {
  const int n = j.at("n").get<int>();
  std::vector<std::tuple<int, int, Color>> edges;
  for (const auto& e : j.at("edges")) {
    const auto color = e.at(2).get<std::string>();
    if (color != "r" && color != "b") throw std::invalid_argument("edge color must be r or b");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(),
                       color == "b" ? Color::Blue : Color::Red);
  }
  m = BicoloredMatching::from_edges(n, edges);
}

inline void to_json(nlohmann::json& j, const DyckPath& d) { j = d.to_string(); }

inline void from_json(const nlohmann::json& j, DyckPath& d) {
  d = DyckPath::parse(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const RestrictionSequence& r) { j = r.values(); }

inline void from_json(const nlohmann::json& j, RestrictionSequence& r) {
  r = RestrictionSequence(j.get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const SignedPermutation& s) { j = s.to_string(); }

inline void from_json(const nlohmann::json& j, SignedPermutation& s) {
  s = SignedPermutation::parse(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const SparsePolynomial& p) { j = p.to_string(); }

inline void to_json(nlohmann::json& j, const StatProfile& profile) {
  j = nlohmann::json{{"scalars", profile.scalars}, {"sets", profile.sets}};
}

}  // namespace sortstat
