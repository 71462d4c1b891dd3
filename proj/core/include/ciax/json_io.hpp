#pragma once

#include <string>
#include <vector>

#include "ciax/fiber.hpp"
#include "ciax/graph.hpp"
#include "ciax/ideal.hpp"
#include "ciax/point.hpp"
#include "ciax/staircase.hpp"
#include "ciax/tensor.hpp"
#include "ciax/verify.hpp"

// String-based JSON exchange formats. Parsers validate invariants and throw
// std::invalid_argument with a one-line reason on malformed input.

namespace ciax {

std::string to_json(const ExponentTensor& u);
ExponentTensor tensor_from_json(const std::string& text);

std::string to_json(const Multidegree& d);
Multidegree multidegree_from_json(const std::string& text);

// {"left": r2, "right": r3, "edges": [[j,k], ...]}; admissible graphs add
// "components": [{"J": [...], "K": [...]}, ...].
std::string to_json(const BipartiteGraph& g);
std::string to_json(const AdmissibleGraph& g);
BipartiteGraph graph_from_json(const std::string& text);
AdmissibleGraph admissible_from_json(const std::string& text);

// {"shape": [r1,r2,r3], "entries": ["a/b", ...]} flat row-major.
std::string to_json(const Point& p);
Point point_from_json(const std::string& text);

std::string to_json(const IdealPresentation& ideal);
IdealPresentation ideal_from_json(const std::string& text);

std::string to_json(const std::vector<MonomialPrime>& primes);
std::vector<MonomialPrime> primes_from_json(const std::string& text);

std::string to_json(const Fiber& fiber, const MoveGraphPartition& partition);

// [{"check":..., "shape":..., "verdict":"pass"|"fail",
//   "counterexample": {...}|null, "detail": [...]}, ...]
std::string to_json(const VerificationReport& report);

}  // namespace ciax
