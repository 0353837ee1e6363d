#pragma once

#include <string>

#include <json.hpp>

#include "padl/bf.hpp"

namespace padl {

// Instance document schema (see README):
//   { "p": 3, "m": 2,
//     "groups": {"A": [1,1], "B": [2], "C": [2]},
//     "d": [[...], ...],          // C.rank rows x A.rank cols
//     "pairing": [[...], ...],    // C.rank rows x B.rank cols
//     "grading": {"A": [...], "B": [...], "C": [...]} }   // optional
BFInstance instance_from_json(const nlohmann::json& j);
nlohmann::ordered_json instance_to_json(const BFInstance& inst);

BFInstance load_instance(const std::string& path);

// Fixture document: externally computed eigenspace orders,
//   { "p": 37, "k": 5, "orders": [ {"n": 0, "e": 1}, ... ] }
struct Fixture {
    u64 p;
    unsigned k;
    std::map<unsigned, unsigned> e_by_level;  // n -> e with |Cl[p^infty]_k| = p^e at level n
};

Fixture fixture_from_json(const nlohmann::json& j);
Fixture load_fixture(const std::string& path);

}  // namespace padl
