#include "ciax/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "ciax/graph.hpp"
#include "ciax/staircase.hpp"
#include "ciax/variety.hpp"
#include "json_detail.hpp"

namespace ciax {

namespace {

using detail::json;

// Runs fn(0..n-1) on a small pool; slot-indexed outputs keep results
// deterministic regardless of scheduling. The first exception wins.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(std::max(hw, 1u), n);
    if (workers <= 1) {
        for (std::size_t idx = 0; idx < n; ++idx) fn(idx);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!failed.load()) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= n) return;
                try {
                    fn(idx);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<std::vector<Int>> compositions(long total, std::size_t parts) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> current(parts, Int(0));
    auto rec = [&](auto&& self, std::size_t pos, long remaining) -> void {
        if (pos + 1 == parts) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (long a = 0; a <= remaining; ++a) {
            current[pos] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    if (parts > 0) rec(rec, 0, total);
    return out;
}

IdealPresentation binomial_part(const IdealPresentation& ideal) {
    IdealPresentation out;
    out.shape = ideal.shape;
    out.binomials = ideal.binomials;
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void require_theorem_shape(const Shape& shape, const char* check) {
    if (shape.r1 < 2) {
        throw std::invalid_argument(std::string(check) + ": requires r1 >= 2");
    }
}

IdealPresentation model_ideal(const Shape& shape, const CheckOptions& opt) {
    if (opt.model_override) {
        require_same_shape(shape, opt.model_override->shape, "model override");
        return *opt.model_override;
    }
    return generators_intersection_model(shape);
}

// Aggregates per-multidegree verdicts in degree order.
CheckResult aggregate(const std::string& name, const Shape& shape,
                      const std::vector<Multidegree>& degrees,
                      const std::vector<std::string>& failures, Timer timer) {
    CheckResult out;
    out.check = name;
    out.pass = true;
    for (std::size_t idx = 0; idx < degrees.size(); ++idx) {
        if (!failures[idx].empty()) {
            out.pass = false;
            out.counterexample_json = failures[idx];
            break;
        }
    }
    out.elapsed_ms = timer.ms();
    (void)shape;
    return out;
}

}  // namespace

std::vector<Multidegree> multidegrees_of_total(const Shape& shape, long total) {
    if (total < 0) throw std::invalid_argument("multidegrees: negative degree");
    std::vector<Multidegree> out;
    const auto rows = compositions(total, static_cast<std::size_t>(shape.r1));
    const auto slices = compositions(total, shape.slice_count());
    for (const auto& r : rows) {
        for (const auto& s : slices) out.emplace_back(shape, r, s);
    }
    return out;
}

std::vector<Multidegree> multidegrees_up_to(const Shape& shape, long max_total) {
    std::vector<Multidegree> out;
    for (long d = 0; d <= max_total; ++d) {
        auto level = multidegrees_of_total(shape, d);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    return out;
}

std::vector<ExponentTensor> tensors_of_total_degree(const Shape& shape, long total) {
    if (total < 0) throw std::invalid_argument("tensors_of_total_degree: negative degree");
    std::vector<ExponentTensor> out;
    for (auto& entries : compositions(total, shape.var_count())) {
        out.emplace_back(shape, std::move(entries));
    }
    std::sort(out.begin(), out.end(), lex_less_entries);
    return out;
}

bool claim1_holds(const Shape& shape, const Multidegree& d,
                  const IdealPresentation& model, std::size_t cap,
                  std::string* counterexample) {
    const Fiber fiber = enumerate_fiber(shape, d, cap);
    const IdealPresentation model_moves = binomial_part(model);
    IdealPresentation gd_moves =
        binomial_part(generators_component_general(graph_of_multidegree(d), shape.r1));

    const MoveGraphPartition pa = move_graph_components(fiber, model_moves);
    const MoveGraphPartition pb = move_graph_components(fiber, gd_moves);
    if (pa.component == pb.component) return true;

    if (counterexample) {
        for (std::size_t x = 0; x < fiber.points.size(); ++x) {
            for (std::size_t y = x + 1; y < fiber.points.size(); ++y) {
                const bool same_a = pa.component[x] == pa.component[y];
                const bool same_b = pb.component[x] == pb.component[y];
                if (same_a == same_b) continue;
                json ce{{"degree", detail::multidegree_json(d)},
                        {"monomials", json::array({detail::tensor_json(fiber.points[x]),
                                                   detail::tensor_json(fiber.points[y])})},
                        {"connected_under_model", same_a},
                        {"connected_under_graph_ideal", same_b}};
                *counterexample = ce.dump();
                return false;
            }
        }
    }
    return false;
}

bool claim2_holds(const Shape& shape, const Multidegree& d,
                  const std::vector<AdmissibleGraph>& all_graphs,
                  std::string* counterexample, std::size_t cap) {
    const Fiber fiber = enumerate_fiber(shape, d, cap);
    const BipartiteGraph gd = graph_of_multidegree(d);
    for (const ExponentTensor& u : fiber.points) {
        const bool in_every_component = std::all_of(
            all_graphs.begin(), all_graphs.end(),
            [&](const AdmissibleGraph& g) { return in_PG_contains(g, shape.r1, u); });
        const bool in_gd = in_PG_contains_general(gd, shape.r1, u);
        if (in_every_component == in_gd) continue;
        if (counterexample) {
            json ce{{"degree", detail::multidegree_json(d)},
                    {"monomial", detail::tensor_json(u)},
                    {"in_all_components", in_every_component},
                    {"in_graph_of_degree", in_gd}};
            *counterexample = ce.dump();
        }
        return false;
    }
    return true;
}

bool containment_refines(const IdealPresentation& model,
                         const IdealPresentation& component, const Multidegree& d,
                         std::size_t cap, std::string* counterexample) {
    require_same_shape(model.shape, component.shape, "containment_refines");
    const Fiber fiber = enumerate_fiber(model.shape, d, cap);
    const MoveGraphPartition pa = reduced_move_graph_components(fiber, model);
    const MoveGraphPartition pb = reduced_move_graph_components(fiber, component);

    // Every relation p^u - p^v of the model (same pa component) must hold in
    // the component ideal: both points absorbed, or both in one pb component.
    std::map<int, std::size_t> representative;
    for (std::size_t idx = 0; idx < fiber.points.size(); ++idx) {
        if (pa.absorbed[idx]) {
            if (!pb.absorbed[idx]) {
                if (counterexample) {
                    json ce{{"degree", detail::multidegree_json(d)},
                            {"monomial", detail::tensor_json(fiber.points[idx])},
                            {"reason", "monomial generator not contained"}};
                    *counterexample = ce.dump();
                }
                return false;
            }
            continue;
        }
        auto [it, fresh] = representative.emplace(pa.component[idx], idx);
        if (fresh) continue;
        const std::size_t rep = it->second;
        const bool ok = pb.absorbed[idx] == pb.absorbed[rep] &&
                        (pb.absorbed[idx] || pb.component[idx] == pb.component[rep]);
        if (ok) continue;
        if (counterexample) {
            json ce{{"degree", detail::multidegree_json(d)},
                    {"monomials", json::array({detail::tensor_json(fiber.points[rep]),
                                               detail::tensor_json(fiber.points[idx])})},
                    {"reason", "model relation broken in component ideal"}};
            *counterexample = ce.dump();
        }
        return false;
    }
    return true;
}

std::vector<ExponentTensor> minimal_generators_up_to(const Shape& shape,
                                                     long max_total,
                                                     const MonomialMembership& member) {
    std::vector<ExponentTensor> out;
    for (long degree = 1; degree <= max_total; ++degree) {
        for (const ExponentTensor& u : tensors_of_total_degree(shape, degree)) {
            if (!member(u)) continue;
            bool minimal = true;
            for (std::size_t t = 0; t < u.entries().size() && minimal; ++t) {
                if (u.entries()[t] == 0) continue;
                std::vector<Int> entries = u.entries();
                entries[t] -= 1;
                if (member(ExponentTensor(shape, std::move(entries)))) minimal = false;
            }
            if (minimal) out.push_back(u);
        }
    }
    return out;
}

long default_degree_bound(const Shape& shape) {
    return shape.var_count() <= 12 ? 3 : 2;
}

CheckResult check_claim1(const Shape& shape, const CheckOptions& opt) {
    require_theorem_shape(shape, "claim1");
    Timer timer;
    const IdealPresentation model = model_ideal(shape, opt);
    const auto degrees = multidegrees_up_to(shape, opt.max_total_degree);
    std::vector<std::string> failures(degrees.size());
    parallel_for(degrees.size(), [&](std::size_t idx) {
        std::string why;
        if (!claim1_holds(shape, degrees[idx], model, opt.fiber_cap, &why)) {
            failures[idx] = why;
        }
    });
    return aggregate("claim1", shape, degrees, failures, timer);
}

CheckResult check_claim2(const Shape& shape, const CheckOptions& opt) {
    require_theorem_shape(shape, "claim2");
    Timer timer;
    const auto all_graphs = enumerate_admissible(shape.r2, shape.r3);
    const auto degrees = multidegrees_up_to(shape, opt.max_total_degree);
    std::vector<std::string> failures(degrees.size());
    parallel_for(degrees.size(), [&](std::size_t idx) {
        std::string why;
        if (!claim2_holds(shape, degrees[idx], all_graphs, &why, opt.fiber_cap)) {
            failures[idx] = why;
        }
    });
    return aggregate("claim2", shape, degrees, failures, timer);
}

CheckResult check_hilbert_equality(const Shape& shape, const CheckOptions& opt) {
    require_theorem_shape(shape, "hilbert");
    Timer timer;
    const IdealPresentation model = model_ideal(shape, opt);
    const auto all_graphs = enumerate_admissible(shape.r2, shape.r3);
    const auto degrees = multidegrees_up_to(shape, opt.max_total_degree);
    std::vector<std::string> failures(degrees.size());
    std::vector<DetailRow> rows(degrees.size());
    parallel_for(degrees.size(), [&](std::size_t idx) {
        const Multidegree& d = degrees[idx];
        const Fiber fiber = enumerate_fiber(shape, d, opt.fiber_cap);

        const MoveGraphPartition pm = reduced_move_graph_components(fiber, model);
        const std::size_t h_model = static_cast<std::size_t>(pm.component_count);

        const IdealPresentation gd_ideal =
            generators_component_general(graph_of_multidegree(d), shape.r1);
        const MoveGraphPartition pg = reduced_move_graph_components(fiber, gd_ideal);

        std::size_t inside = 0;
        for (const ExponentTensor& u : fiber.points) {
            const bool in_every = std::all_of(
                all_graphs.begin(), all_graphs.end(),
                [&](const AdmissibleGraph& g) { return in_PG_contains(g, shape.r1, u); });
            if (in_every) ++inside;
        }
        const std::size_t outside = fiber.points.size() - inside;

        DetailRow row;
        row.degree = d;
        row.fiber_size = fiber.points.size();
        row.hilbert_model = h_model;
        row.initial_model = fiber.points.size() - h_model;
        row.hilbert_gd = static_cast<std::size_t>(pg.component_count);
        row.initial_gd = fiber.points.size() - row.hilbert_gd;
        rows[idx] = std::move(row);

        if (h_model != outside) {
            json ce{{"degree", detail::multidegree_json(d)},
                    {"hilbert_model", h_model},
                    {"outside_intersection", outside}};
            failures[idx] = ce.dump();
        }
    });
    CheckResult out = aggregate("hilbert", shape, degrees, failures, timer);
    out.detail = std::move(rows);
    out.elapsed_ms = timer.ms();
    return out;
}

CheckResult check_ideal_membership_decomposition(const Shape& shape,
                                                 const CheckOptions& opt) {
    require_theorem_shape(shape, "ideal");
    Timer timer;
    const IdealPresentation model = model_ideal(shape, opt);
    const auto all_graphs = enumerate_admissible(shape.r2, shape.r3);
    const auto degrees = multidegrees_up_to(shape, opt.max_total_degree);

    std::vector<IdealPresentation> components;
    components.reserve(all_graphs.size());
    for (const AdmissibleGraph& g : all_graphs) {
        components.push_back(generators_component(g, shape.r1));
    }

    // (a) degreewise containment of the model in every P_G.
    std::vector<std::string> failures(degrees.size());
    parallel_for(degrees.size(), [&](std::size_t idx) {
        for (std::size_t gi = 0; gi < all_graphs.size(); ++gi) {
            std::string why;
            if (!containment_refines(model, components[gi], degrees[idx],
                                     opt.fiber_cap, &why)) {
                json ce = json::parse(why);
                ce["graph"] = detail::admissible_json(all_graphs[gi]);
                failures[idx] = ce.dump();
                return;
            }
        }
    });
    CheckResult out = aggregate("ideal", shape, degrees, failures, timer);

    // (b) dimension equality via the claims and the Hilbert comparison.
    if (out.pass) {
        CheckOptions sub = opt;
        const CheckResult c1 = check_claim1(shape, sub);
        const CheckResult c2 = check_claim2(shape, sub);
        const CheckResult hb = check_hilbert_equality(shape, sub);
        for (const CheckResult* dep : {&c1, &c2, &hb}) {
            if (!dep->pass) {
                out.pass = false;
                json ce{{"failed_dependency", dep->check},
                        {"counterexample",
                         dep->counterexample_json.empty()
                             ? json(nullptr)
                             : json::parse(dep->counterexample_json)}};
                out.counterexample_json = ce.dump();
                break;
            }
        }
    }

    // (c) irredundance witnesses for every ordered pair.
    if (out.pass) {
        for (std::size_t a = 0; a < all_graphs.size() && out.pass; ++a) {
            for (std::size_t b = 0; b < all_graphs.size(); ++b) {
                if (a == b) continue;
                try {
                    const IrredundanceWitness w = irredundance_witness(
                        all_graphs[a], all_graphs[b], shape.r1,
                        opt.seed + 7919 * a + b);
                    if (w.residual == 0) throw std::logic_error("zero residual");
                } catch (const std::exception& e) {
                    out.pass = false;
                    json ce{{"pair", json::array({detail::admissible_json(all_graphs[a]),
                                                  detail::admissible_json(all_graphs[b])})},
                            {"reason", std::string("irredundance witness failed: ") +
                                           e.what()}};
                    out.counterexample_json = ce.dump();
                    break;
                }
            }
        }
    }
    out.elapsed_ms = timer.ms();
    return out;
}

CheckResult check_radicality(const Shape& shape, const CheckOptions& opt) {
    require_theorem_shape(shape, "radical");
    Timer timer;
    CheckResult out;
    out.check = "radical";
    out.pass = true;

    const IdealPresentation model = model_ideal(shape, opt);
    std::map<std::vector<Int>, std::set<std::vector<Int>>> cache;
    auto member_model = [&](const ExponentTensor& u) {
        const Multidegree d = phi(u);
        std::vector<Int> key = d.rows();
        key.insert(key.end(), d.slices().begin(), d.slices().end());
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::set<std::vector<Int>> piece;
            for (const ExponentTensor& m : initial_piece(model, d, opt.fiber_cap)) {
                piece.insert(m.entries());
            }
            it = cache.emplace(std::move(key), std::move(piece)).first;
        }
        return it->second.count(u.entries()) > 0;
    };

    auto report_failure = [&](const char* which, const json& ideal_tag,
                              const ExponentTensor& u) {
        out.pass = false;
        json ce{{"reason", which}, {"ideal", ideal_tag}, {"monomial", detail::tensor_json(u)}};
        out.counterexample_json = ce.dump();
    };

    for (const ExponentTensor& u :
         minimal_generators_up_to(shape, opt.max_total_degree, member_model)) {
        if (!u.is_squarefree()) {
            report_failure("non-squarefree minimal generator", json("model"), u);
            out.elapsed_ms = timer.ms();
            return out;
        }
    }

    for (const AdmissibleGraph& g : enumerate_admissible(shape.r2, shape.r3)) {
        auto member_g = [&](const ExponentTensor& u) {
            return in_PG_contains(g, shape.r1, u);
        };
        for (const ExponentTensor& u :
             minimal_generators_up_to(shape, opt.max_total_degree, member_g)) {
            if (!u.is_squarefree()) {
                report_failure("non-squarefree minimal generator",
                               detail::admissible_json(g), u);
                out.elapsed_ms = timer.ms();
                return out;
            }
        }
        // Memberships must come with squarefree witnesses.
        for (long degree = 1; degree <= opt.max_total_degree; ++degree) {
            for (const ExponentTensor& u : tensors_of_total_degree(shape, degree)) {
                const auto witness = in_PG_witness(g, shape.r1, u);
                if (witness && !witness->is_squarefree()) {
                    report_failure("non-squarefree membership witness",
                                   detail::admissible_json(g), u);
                    out.elapsed_ms = timer.ms();
                    return out;
                }
            }
        }
    }
    out.elapsed_ms = timer.ms();
    return out;
}

CheckResult check_variety_union(const Shape& shape, const CheckOptions& opt) {
    require_theorem_shape(shape, "variety");
    Timer timer;
    CheckResult out;
    out.check = "variety";
    out.pass = true;

    const IdealPresentation model = generators_intersection_model(shape);
    const auto all_graphs = enumerate_admissible(shape.r2, shape.r3);

    auto fail = [&](json ce) {
        out.pass = false;
        out.counterexample_json = ce.dump();
    };

    // Containment direction: generic samples of every component satisfy the
    // model exactly, and point location finds the generating graph.
    for (std::size_t gi = 0; gi < all_graphs.size() && out.pass; ++gi) {
        for (int s = 0; s < opt.samples_per_component && out.pass; ++s) {
            const unsigned long seed = opt.seed + 1000 * gi + static_cast<unsigned long>(s);
            const Point p = sample_generic_point(all_graphs[gi], shape.r1, seed);
            const std::vector<Rat> residuals = evaluate_generators(p, model);
            for (std::size_t r = 0; r < residuals.size(); ++r) {
                if (residuals[r] != 0) {
                    fail(json{{"graph", detail::admissible_json(all_graphs[gi])},
                              {"seed", seed},
                              {"generator_index", r},
                              {"reason", "model generator residual nonzero"}});
                    break;
                }
            }
            if (!out.pass) break;
            const LocateReport located = locate_point_report(p);
            const bool found =
                std::find(located.direct.begin(), located.direct.end(),
                          all_graphs[gi]) != located.direct.end();
            if (!found || !located.rules_agree) {
                fail(json{{"graph", detail::admissible_json(all_graphs[gi])},
                          {"seed", seed},
                          {"reason", !found ? "sample not located on its component"
                                            : "location rules disagree"}});
            }
        }
    }

    // Union direction at desk scale: degenerate points assembled to satisfy
    // the rank conditions slice by slice must be located somewhere.
    if (out.pass) {
        const int rounds = opt.samples_per_component *
                           static_cast<int>(all_graphs.size());
        for (int t = 0; t < rounds && out.pass; ++t) {
            std::mt19937_64 rng(opt.seed * 2654435761UL + static_cast<unsigned long>(t));
            std::uniform_int_distribution<long> small(0, 4);
            const AdmissibleGraph& g = all_graphs[rng() % all_graphs.size()];

            std::vector<std::vector<Rat>> directions;
            for (std::size_t b = 0; b < g.components().size(); ++b) {
                if (!directions.empty() && rng() % 3 == 0) {
                    directions.push_back(directions.back());  // mergeable components
                    continue;
                }
                std::vector<Rat> v(static_cast<std::size_t>(shape.r1));
                for (Rat& x : v) x = Rat(small(rng));
                directions.push_back(std::move(v));
            }
            Point p(shape);
            for (std::size_t b = 0; b < g.components().size(); ++b) {
                for (int j : g.components()[b].J) {
                    for (int k : g.components()[b].K) {
                        const Rat lambda(small(rng));
                        for (int i = 1; i <= shape.r1; ++i) {
                            p.set({i, j, k},
                                  lambda * directions[b][static_cast<std::size_t>(i - 1)]);
                        }
                    }
                }
            }

            for (const Rat& residual : evaluate_generators(p, model)) {
                if (residual != 0) {
                    fail(json{{"reason", "assembled point off the model variety"},
                              {"point", detail::point_json(p)}});
                    break;
                }
            }
            if (!out.pass) break;
            const LocateReport located = locate_point_report(p);
            const bool found = std::find(located.direct.begin(), located.direct.end(),
                                         g) != located.direct.end();
            if (located.direct.empty() || !found || !located.rules_agree) {
                fail(json{{"reason", "assembled point not located"},
                          {"point", detail::point_json(p)}});
            }
        }
    }
    out.elapsed_ms = timer.ms();
    return out;
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerificationReport run_checks(const Shape& shape,
                              const std::vector<std::string>& names,
                              const CheckOptions& opt) {
    Timer timer;
    std::vector<std::string> selected = names.empty() ? all_check_names() : names;
    for (const std::string& name : selected) {
        if (std::find(all_check_names().begin(), all_check_names().end(), name) ==
            all_check_names().end()) {
            throw std::invalid_argument("unknown check: " + name);
        }
    }

    VerificationReport report;
    report.shape = shape;
    report.max_total_degree = opt.max_total_degree;
    report.seed = opt.seed;
    for (const std::string& name : all_check_names()) {
        if (std::find(selected.begin(), selected.end(), name) == selected.end()) {
            continue;
        }
        if (name == "claim1") report.checks.push_back(check_claim1(shape, opt));
        if (name == "claim2") report.checks.push_back(check_claim2(shape, opt));
        if (name == "hilbert") report.checks.push_back(check_hilbert_equality(shape, opt));
        if (name == "ideal") {
            report.checks.push_back(check_ideal_membership_decomposition(shape, opt));
        }
        if (name == "radical") report.checks.push_back(check_radicality(shape, opt));
        if (name == "variety") report.checks.push_back(check_variety_union(shape, opt));
    }
    report.elapsed_ms = timer.ms();
    return report;
}

}  // namespace ciax
