#include "hcproj/audit.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "hcproj/errors.hpp"
#include "hcproj/incidence.hpp"
#include "hcproj/matching.hpp"
#include "hcproj/oracle.hpp"
#include "hcproj/projector.hpp"
#include "hcproj/rng.hpp"
#include "hcproj/solver.hpp"
#include "hcproj/union_find.hpp"

namespace hcproj {

const std::vector<ClaimInfo>& claim_table() {
    static const std::vector<ClaimInfo> table = {
        {ClaimId::Thm1C3, "THM1_C3",
         "projector of a strongly connected degree-[1,2] digraph has at most n/4 "
         "four-vertex cycle components",
         300, 4, 10, 0},
        {ClaimId::Cor2, "COR2",
         "full-rank split incidence parts imply strong connectivity (converse direction)",
         100, 6, 10, 0},
        {ClaimId::Lemma2, "LEMMA2",
         "a Hamiltonian cycle's projector image is a perfect matching of n disjoint edges",
         300, 4, 12, 24},
        {ClaimId::Lemma4, "LEMMA4",
         "every even cycle component splits into two disjoint perfect matchings whose "
         "union is the component",
         300, 4, 12, 0},
        {ClaimId::Lemma5, "LEMMA5",
         "at most 2^(n/4) labeled perfect matchings and n/2 unlabeled classes",
         300, 4, 10, 0},
        {ClaimId::Prop1, "PROP1",
         "perfect matchings whose codes have equal weight lift to equal rank",
         300, 5, 10, 0},
        {ClaimId::Thm2Fwd, "THM2_FWD",
         "every Hamiltonian instance yields a perfect matching with lifted rank n-1",
         400, 3, 10, 24},
        {ClaimId::Thm2Back, "THM2_BACK",
         "every perfect matching with lifted rank n-1 lifts to a Hamiltonian cycle",
         400, 3, 10, 0},
        {ClaimId::Thm3Complete, "THM3_COMPLETE",
         "the greedy rank-guided flip search decides Hamiltonicity",
         500, 6, 12, 24},
        {ClaimId::Thm6Equiv, "THM6_EQUIV",
         "degree-two vertex splitting preserves Hamiltonicity in both directions",
         400, 3, 10, 12},
        {ClaimId::Cor3, "COR3",
         "a second distinct Hamiltonian cycle is found whenever one exists",
         300, 4, 10, 16},
    };
    return table;
}

const ClaimInfo& claim_info(ClaimId id) {
    for (const auto& info : claim_table())
        if (info.id == id)
            return info;
    throw std::invalid_argument("unknown claim id");
}

std::optional<ClaimId> claim_from_name(std::string_view name) {
    for (const auto& info : claim_table())
        if (name == info.name)
            return info.id;
    return std::nullopt;
}

const char* audit_verdict_name(AuditVerdict v) {
    switch (v) {
    case AuditVerdict::Confirmed: return "CONFIRMED";
    case AuditVerdict::Refuted: return "REFUTED";
    case AuditVerdict::Undecided: return "UNDECIDED";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kEnumCap = 4096;

// Verification used against the matching pipeline: degree-1 everywhere plus
// one weak component, written out directly rather than through digraph-core.
bool oracle_style_hc(const Digraph& d, const std::vector<int>& arc_set) {
    if (d.n() < 2 || static_cast<int>(arc_set.size()) != d.n())
        return false;
    std::vector<int> outc(d.n(), 0), inc(d.n(), 0);
    UnionFind uf(d.n());
    for (int j : arc_set) {
        ++outc[d.tail(j)];
        ++inc[d.head(j)];
        uf.unite(d.tail(j), d.head(j));
    }
    for (int v = 0; v < d.n(); ++v)
        if (outc[v] != 1 || inc[v] != 1)
            return false;
    return uf.components() == 1;
}

int four_cycle_components(const Digraph& d) {
    auto dec = decompose(project(d));
    int count = 0;
    for (int ci : dec.cycle_components)
        if (dec.components[ci].edges.size() == 4)
            ++count;
    return count;
}

bool ranks_full(const Digraph& d) {
    if (d.n() == 0 || d.m() == 0)
        return false;
    auto [cplus, cminus] = split_incidence(build_incidence(d));
    return rank_exact(cplus) == d.n() && rank_exact(cminus) == d.n();
}

bool premise_thm1_c3(const Digraph& d) { return classify(d).kind == DegreeClassKind::Gamma; }

bool violates_thm1_c3(const Digraph& d) {
    return premise_thm1_c3(d) && 4 * four_cycle_components(d) > d.n();
}

bool premise_cor2(const Digraph& d) { return ranks_full(d); }

bool violates_cor2(const Digraph& d) {
    return ranks_full(d) && !is_strongly_connected(d);
}

bool premise_lemma2(const Digraph& d) {
    return d.n() <= kBruteForceMaxN && brute_force_hamiltonian(d).has_value();
}

bool violates_lemma2(const Digraph& d) {
    if (d.n() > kBruteForceMaxN)
        return false;
    auto hc = brute_force_hamiltonian(d);
    if (!hc)
        return false;
    std::vector<int> xc(d.n(), 0), yc(d.n(), 0);
    for (int j : *hc) {
        ++xc[d.tail(j)];
        ++yc[d.head(j)];
    }
    if (static_cast<int>(hc->size()) != d.n())
        return true;
    for (int v = 0; v < d.n(); ++v)
        if (xc[v] != 1 || yc[v] != 1)
            return true;
    return false;
}

bool decomposable(const Digraph& d) { return classify(d).kind != DegreeClassKind::Outside; }

bool premise_lemma4(const Digraph& d) {
    return decomposable(d) && !decompose(project(d)).cycle_components.empty();
}

bool violates_lemma4(const Digraph& d) {
    if (!decomposable(d))
        return false;
    auto dec = decompose(project(d));
    for (int ci : dec.cycle_components) {
        const Component& comp = dec.components[ci];
        auto [a, b] = two_matchings_of_cycle(comp);
        if (a.size() + b.size() != comp.edges.size())
            return true;
        std::vector<int> joint;
        joint.reserve(a.size() + b.size());
        joint.insert(joint.end(), a.begin(), a.end());
        joint.insert(joint.end(), b.begin(), b.end());
        std::sort(joint.begin(), joint.end());
        if (std::adjacent_find(joint.begin(), joint.end()) != joint.end())
            return true; // classes overlap
        std::vector<int> comp_edges = comp.edges;
        std::sort(comp_edges.begin(), comp_edges.end());
        if (joint != comp_edges)
            return true; // union misses an edge
        // each class covers every component vertex exactly once
        for (const auto& cls : {a, b})
            if (2 * cls.size() != comp.vertices.size())
                return true;
    }
    return false;
}

bool premise_lemma5(const Digraph& d) {
    if (classify(d).kind != DegreeClassKind::Gamma)
        return false;
    return count_matchings(decompose(project(d))).labeled > 0;
}

bool violates_lemma5(const Digraph& d) {
    if (classify(d).kind != DegreeClassKind::Gamma)
        return false;
    auto mc = count_matchings(decompose(project(d)));
    if (mc.labeled == 0)
        return false;
    // labeled = 2^k exceeds 2^(n/4) iff 4k > n; classes = k+1 exceed n/2 iff
    // 2(k+1) > n. Integer comparisons keep this exact.
    return 4 * mc.cycle_components > static_cast<std::size_t>(d.n()) ||
           2 * mc.weight_classes > static_cast<std::size_t>(d.n());
}

// Same-weight codes with different lifted ranks, if any.
struct WeightConflict {
    std::string code_a, code_b;
    int rank_a = 0, rank_b = 0;
    int weight = 0;
};

std::optional<WeightConflict> find_weight_conflict(const Digraph& d) {
    if (classify(d).kind != DegreeClassKind::Gamma)
        return std::nullopt;
    ProjectorGraph g = project(d);
    auto dec = decompose(g);
    std::vector<std::pair<ComponentCode, Matching>> items;
    try {
        items = enumerate_matchings(g, dec, kEnumCap);
    } catch (const NoPerfectMatchingError&) {
        return std::nullopt;
    }
    std::map<int, std::pair<std::string, int>> by_weight;
    for (const auto& [code, m] : items) {
        int w = 0;
        for (auto b : code.bits)
            w += b;
        int r = rank_by_components(d, lift(g, m));
        auto [it, inserted] = by_weight.emplace(w, std::make_pair(code.str(), r));
        if (!inserted && it->second.second != r) {
            WeightConflict c;
            c.code_a = it->second.first;
            c.rank_a = it->second.second;
            c.code_b = code.str();
            c.rank_b = r;
            c.weight = w;
            return c;
        }
    }
    return std::nullopt;
}

bool premise_prop1(const Digraph& d) {
    if (classify(d).kind != DegreeClassKind::Gamma)
        return false;
    auto mc = count_matchings(decompose(project(d)));
    return mc.labeled > 1;
}

bool violates_prop1(const Digraph& d) { return find_weight_conflict(d).has_value(); }

bool premise_thm2_fwd(const Digraph& d) {
    return d.n() <= kBruteForceMaxN && decomposable(d) &&
           brute_force_hamiltonian(d).has_value();
}

bool violates_thm2_fwd(const Digraph& d) {
    if (!premise_thm2_fwd(d))
        return false;
    return solve_exact(d).verdict != Verdict::Hamiltonian;
}

bool premise_thm2_back(const Digraph& d) {
    if (!decomposable(d))
        return false;
    return perfect_matching(project(d)).has_value();
}

bool violates_thm2_back(const Digraph& d) {
    if (!decomposable(d))
        return false;
    ProjectorGraph g = project(d);
    auto dec = decompose(g);
    std::vector<std::pair<ComponentCode, Matching>> items;
    try {
        items = enumerate_matchings(g, dec, kEnumCap);
    } catch (const NoPerfectMatchingError&) {
        return false;
    }
    for (const auto& [code, m] : items) {
        auto arcs = lift(g, m);
        if (rank_by_components(d, arcs) == d.n() - 1 && !oracle_style_hc(d, arcs))
            return true;
    }
    return false;
}

bool premise_thm3(const Digraph& d) {
    return d.n() <= kBruteForceMaxN && brute_force_hamiltonian(d).has_value();
}

bool violates_thm3(const Digraph& d) {
    if (!premise_thm3(d))
        return false;
    return solve_greedy(d).verdict == Verdict::GreedyStuck;
}

bool premise_thm6(const Digraph& d) {
    return decomposable(d) && 2 * d.n() <= kBruteForceMaxN;
}

bool violates_thm6(const Digraph& d) {
    if (!premise_thm6(d))
        return false;
    auto [split, map] = split_degree_two(d);
    auto hc_d = brute_force_hamiltonian(d);
    auto hc_s = brute_force_hamiltonian(split);
    if (hc_d.has_value() != hc_s.has_value())
        return true;
    if (hc_s) {
        try {
            unsplit(map, *hc_s);
        } catch (const NotHamiltonianAfterUnsplitError&) {
            return true;
        }
    }
    return false;
}

bool premise_cor3(const Digraph& d) {
    if (classify(d).kind != DegreeClassKind::Gamma || d.n() > kEnumerationMaxN)
        return false;
    return enumerate_hamiltonian_cycles(d).size() >= 2;
}

bool violates_cor3(const Digraph& d) {
    if (!premise_cor3(d))
        return false;
    auto hcs = enumerate_hamiltonian_cycles(d);
    std::optional<std::vector<int>> second;
    try {
        second = find_second_hc(d, hcs.front());
    } catch (const CapExceededError&) {
        return true;
    }
    if (!second || *second == hcs.front())
        return true;
    return std::find(hcs.begin(), hcs.end(), *second) == hcs.end();
}

} // namespace

bool replay_refutation(ClaimId claim, const Digraph& d) {
    switch (claim) {
    case ClaimId::Thm1C3: return violates_thm1_c3(d);
    case ClaimId::Cor2: return violates_cor2(d);
    case ClaimId::Lemma2: return violates_lemma2(d);
    case ClaimId::Lemma4: return violates_lemma4(d);
    case ClaimId::Lemma5: return violates_lemma5(d);
    case ClaimId::Prop1: return violates_prop1(d);
    case ClaimId::Thm2Fwd: return violates_thm2_fwd(d);
    case ClaimId::Thm2Back: return violates_thm2_back(d);
    case ClaimId::Thm3Complete: return violates_thm3(d);
    case ClaimId::Thm6Equiv: return violates_thm6(d);
    case ClaimId::Cor3: return violates_cor3(d);
    }
    return false;
}

namespace {

Digraph remove_arc(const Digraph& d, int arc) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.m() - 1);
    for (int j = 0; j < d.m(); ++j)
        if (j != arc)
            arcs.push_back(d.arcs()[j]);
    return Digraph(d.n(), std::move(arcs));
}

Digraph remove_vertex(const Digraph& d, int v) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [t, h] : d.arcs()) {
        if (t == v || h == v)
            continue;
        arcs.emplace_back(t > v ? t - 1 : t, h > v ? h - 1 : h);
    }
    return Digraph(d.n() - 1, std::move(arcs));
}

// Best-effort greedy shrink under a step budget; the result still replays.
Digraph shrink_witness(ClaimId claim, Digraph d, int max_steps = 400) {
    int steps = 0;
    bool progress = true;
    while (progress && steps < max_steps) {
        progress = false;
        for (int j = d.m() - 1; j >= 0 && steps < max_steps; --j) {
            Digraph candidate = remove_arc(d, j);
            ++steps;
            if (replay_refutation(claim, candidate)) {
                d = std::move(candidate);
                progress = true;
                break;
            }
        }
        if (progress)
            continue;
        for (int v = d.n() - 1; v >= 0 && steps < max_steps; --v) {
            Digraph candidate = remove_vertex(d, v);
            ++steps;
            if (replay_refutation(claim, candidate)) {
                d = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return d;
}

constexpr double kDensities[] = {0.25, 0.5, 1.0, 2.0};

// Instance mix per trial: planted cycles at cycling densities, with sparse
// non-planted instances sprinkled in so non-Hamiltonian cases appear.
Digraph mixed_instance(int n, DegreeClassKind cls, std::uint64_t seed, std::uint64_t trial) {
    InstanceSpec spec;
    spec.n = n;
    spec.seed = derive_seed(seed, trial);
    spec.density = kDensities[trial % 4];
    if (trial % 3 == 2) {
        spec.plant_hc = false;
        spec.cls = cls;
        if (cls == DegreeClassKind::Gamma)
            spec.density = std::max(spec.density, 1.0);
        try {
            return generate(spec).digraph;
        } catch (const UnsatisfiableError&) {
            // fall through to a planted instance with the same substream
        }
    }
    spec.plant_hc = true;
    spec.cls = cls;
    return generate(spec).digraph;
}

struct ClaimHooks {
    std::function<Digraph(std::uint64_t trial, int size)> make;
    std::function<bool(const Digraph&)> premise;
    std::function<std::string(const Digraph&)> describe; // refutation detail
};

ClaimHooks hooks_for(ClaimId claim, std::uint64_t seed) {
    auto gamma = [seed](std::uint64_t t, int size) {
        return mixed_instance(size, DegreeClassKind::Gamma, seed, t);
    };
    auto bound_two = [seed](std::uint64_t t, int size) {
        return mixed_instance(size, DegreeClassKind::BoundTwo, seed, t);
    };
    switch (claim) {
    case ClaimId::Thm1C3:
        return {gamma, premise_thm1_c3, [](const Digraph& d) {
                    std::ostringstream os;
                    os << "four_cycle_components=" << four_cycle_components(d) << ";n=" << d.n();
                    return os.str();
                }};
    case ClaimId::Cor2:
        return {[seed](std::uint64_t t, int size) -> Digraph {
                    if (t % 2 == 0) {
                        int c1 = std::max(2, size / 2);
                        return gen_two_cycles_bridge(c1, std::max(2, size - c1));
                    }
                    return mixed_instance(size, DegreeClassKind::BoundTwo, seed, t);
                },
                premise_cor2, [](const Digraph& d) {
                    std::ostringstream os;
                    os << "rank_plus=" << d.n() << ";rank_minus=" << d.n()
                       << ";strongly_connected=0";
                    return os.str();
                }};
    case ClaimId::Lemma2:
        return {gamma, premise_lemma2, [](const Digraph&) {
                    return std::string("image_not_one_regular=1");
                }};
    case ClaimId::Lemma4:
        return {gamma, premise_lemma4, [](const Digraph&) {
                    return std::string("cycle_classes_broken=1");
                }};
    case ClaimId::Lemma5:
        return {gamma, premise_lemma5, [](const Digraph& d) {
                    auto mc = count_matchings(decompose(project(d)));
                    std::ostringstream os;
                    os << "labeled=" << mc.labeled << ";cycle_components=" << mc.cycle_components
                       << ";weight_classes=" << mc.weight_classes << ";n=" << d.n();
                    return os.str();
                }};
    case ClaimId::Prop1:
        return {gamma, premise_prop1, [](const Digraph& d) {
                    auto c = find_weight_conflict(d);
                    std::ostringstream os;
                    if (c) {
                        os << "weight=" << c->weight << ";code_a=" << c->code_a
                           << ";rank_a=" << c->rank_a << ";code_b=" << c->code_b
                           << ";rank_b=" << c->rank_b;
                    }
                    return os.str();
                }};
    case ClaimId::Thm2Fwd:
        return {bound_two, premise_thm2_fwd, [](const Digraph& d) {
                    return "exact_verdict=" + std::string(verdict_token(solve_exact(d).verdict));
                }};
    case ClaimId::Thm2Back:
        return {bound_two, premise_thm2_back, [](const Digraph&) {
                    return std::string("rank_n_minus_1_matching_not_hamiltonian=1");
                }};
    case ClaimId::Thm3Complete:
        return {gamma, premise_thm3, [](const Digraph& d) {
                    auto out = solve_greedy(d);
                    std::ostringstream os;
                    os << "greedy_verdict=" << verdict_token(out.verdict)
                       << ";best_rank=" << out.best_rank << ";target=" << d.n() - 1
                       << ";final_code=" << out.final_code;
                    return os.str();
                }};
    case ClaimId::Thm6Equiv:
        return {bound_two, premise_thm6, [](const Digraph& d) {
                    auto [split, map] = split_degree_two(d);
                    auto hc_d = brute_force_hamiltonian(d);
                    auto hc_s = brute_force_hamiltonian(split);
                    std::ostringstream os;
                    os << "hc_original=" << hc_d.has_value() << ";hc_split=" << hc_s.has_value();
                    return os.str();
                }};
    case ClaimId::Cor3:
        return {gamma, premise_cor3, [](const Digraph& d) {
                    std::ostringstream os;
                    os << "oracle_cycles=" << enumerate_hamiltonian_cycles(d).size();
                    return os.str();
                }};
    }
    throw std::invalid_argument("unknown claim id");
}

} // namespace

AuditReport audit(const AuditRequest& request) {
    const auto start_time = std::chrono::steady_clock::now();
    const ClaimInfo& info = claim_info(request.claim);

    AuditRequest req = request;
    if (req.budget == 0)
        throw BudgetTooSmallError();
    if (req.size_lo == 0)
        req.size_lo = info.default_size_lo;
    if (req.size_hi == 0)
        req.size_hi = info.default_size_hi;
    if (req.size_lo < 3 || req.size_hi < req.size_lo)
        throw std::invalid_argument("invalid size range");
    if (info.size_guard > 0 && req.size_hi > info.size_guard)
        throw SizeOutOfGuardError(req.size_hi, info.size_guard);

    ClaimHooks hooks = hooks_for(req.claim, req.seed);

    AuditReport report;
    report.claim = info.name;
    report.budget = req.budget;
    report.size_lo = req.size_lo;
    report.size_hi = req.size_hi;
    report.seed = req.seed;

    const int span = req.size_hi - req.size_lo + 1;
    for (std::uint64_t t = 0; t < req.budget; ++t) {
        ++report.trials;
        int size = req.size_lo + static_cast<int>(t % span);
        Digraph d = hooks.make(t, size);
        if (hooks.premise(d))
            ++report.applicable;
        if (replay_refutation(req.claim, d)) {
            report.verdict = AuditVerdict::Refuted;
            report.witness = format_digraph_inline(d);
            report.detail = hooks.describe(d) + ";trial=" + std::to_string(t);
            Digraph small = shrink_witness(req.claim, d);
            report.witness_minimized = format_digraph_inline(small);
            break;
        }
    }
    if (report.verdict != AuditVerdict::Refuted) {
        report.verdict =
            report.applicable > 0 ? AuditVerdict::Confirmed : AuditVerdict::Undecided;
        report.detail = "applicable=" + std::to_string(report.applicable) + ";counterexamples=0";
    }

    report.elapsed_micros = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                              start_time)
            .count());
    return report;
}

std::string format_report_text(const AuditReport& r, bool with_timing) {
    std::ostringstream os;
    os << "claim=" << r.claim << '\n'
       << "verdict=" << audit_verdict_name(r.verdict) << '\n'
       << "budget=" << r.budget << '\n'
       << "trials=" << r.trials << '\n'
       << "applicable=" << r.applicable << '\n'
       << "sizes=" << r.size_lo << ".." << r.size_hi << '\n'
       << "seed=" << r.seed << '\n'
       << "detail=" << r.detail << '\n'
       << "witness=" << r.witness << '\n'
       << "witness_minimized=" << r.witness_minimized << '\n';
    if (with_timing)
        os << "elapsed_micros=" << r.elapsed_micros << '\n';
    return os.str();
}

std::string format_report_csv(const AuditReport& r, bool with_timing) {
    std::ostringstream os;
    os << "claim,verdict,budget,trials,applicable,size_lo,size_hi,seed,detail,witness,"
          "witness_minimized";
    if (with_timing)
        os << ",elapsed_micros";
    os << '\n';
    os << r.claim << ',' << audit_verdict_name(r.verdict) << ',' << r.budget << ',' << r.trials
       << ',' << r.applicable << ',' << r.size_lo << ',' << r.size_hi << ',' << r.seed << ','
       << r.detail << ',' << r.witness << ',' << r.witness_minimized;
    if (with_timing)
        os << ',' << r.elapsed_micros;
    os << '\n';
    return os.str();
}

} // namespace hcproj
