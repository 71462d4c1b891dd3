#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ciax/fiber.hpp"
#include "ciax/ideal.hpp"
#include "ciax/tensor.hpp"

namespace ciax {

/// Multidegrees of the given total degree, in lexicographic order of the
/// concatenated (rows, slices) vector.
std::vector<Multidegree> multidegrees_of_total(const Shape& shape, long total);
/// By total degree 0..max_total, then lex.
std::vector<Multidegree> multidegrees_up_to(const Shape& shape, long max_total);

/// All exponent tensors of the given total degree, lex order.
std::vector<ExponentTensor> tensors_of_total_degree(const Shape& shape, long total);

struct DetailRow {
    Multidegree degree;
    std::size_t fiber_size = 0;
    std::size_t hilbert_model = 0;    // quotient dimension under the model ideal
    std::size_t initial_model = 0;    // initial-piece size under the model ideal
    std::size_t hilbert_gd = 0;       // same numbers under P_{G(d)}
    std::size_t initial_gd = 0;
};

struct CheckResult {
    std::string check;
    bool pass = false;
    /// JSON object with a concrete counterexample; empty when passing.
    std::string counterexample_json;
    std::vector<DetailRow> detail;
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    Shape shape;
    long max_total_degree = 0;
    unsigned long seed = 0;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool all_pass() const;
};

/// Per-multidegree claim verdicts. The model ideal defaults to the
/// intersection-model generators; tests inject mutated presentations.
bool claim1_holds(const Shape& shape, const Multidegree& d,
                  const IdealPresentation& model, std::size_t cap,
                  std::string* counterexample = nullptr);
bool claim2_holds(const Shape& shape, const Multidegree& d,
                  const std::vector<AdmissibleGraph>& all_graphs,
                  std::string* counterexample = nullptr,
                  std::size_t cap = kDefaultFiberCap);

/// Degreewise containment of the model ideal in P_G: every move-graph
/// relation of the model holds in the component presentation.
bool containment_refines(const IdealPresentation& model,
                         const IdealPresentation& component, const Multidegree& d,
                         std::size_t cap, std::string* counterexample = nullptr);

using MonomialMembership = std::function<bool(const ExponentTensor&)>;

/// Minimal generators, up to the degree bound, of a monomial ideal given by a
/// membership oracle (a member none of whose immediate divisors is a member).
std::vector<ExponentTensor> minimal_generators_up_to(const Shape& shape,
                                                     long max_total,
                                                     const MonomialMembership& member);

struct CheckOptions {
    long max_total_degree = 3;
    unsigned long seed = 1;
    int samples_per_component = 5;
    std::size_t fiber_cap = kDefaultFiberCap;
    /// Override for the model ideal (mutation testing); nullptr = model.
    const IdealPresentation* model_override = nullptr;
};

CheckResult check_claim1(const Shape& shape, const CheckOptions& opt = {});
CheckResult check_claim2(const Shape& shape, const CheckOptions& opt = {});
CheckResult check_hilbert_equality(const Shape& shape, const CheckOptions& opt = {});
CheckResult check_ideal_membership_decomposition(const Shape& shape,
                                                 const CheckOptions& opt = {});
CheckResult check_radicality(const Shape& shape, const CheckOptions& opt = {});
CheckResult check_variety_union(const Shape& shape, const CheckOptions& opt = {});

/// The default degree bound: 3 for shapes with at most 12 variables, else 2.
long default_degree_bound(const Shape& shape);

inline const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {"claim1", "claim2", "hilbert",
                                                   "ideal",  "radical", "variety"};
    return names;
}

/// Runs the named checks (all six when empty) and merges the results.
VerificationReport run_checks(const Shape& shape,
                              const std::vector<std::string>& names = {},
                              const CheckOptions& opt = {});

}  // namespace ciax
