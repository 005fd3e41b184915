// Check catalog and the parallel runner.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "akschur/loop_lie.hpp"
#include "akschur/modules.hpp"
#include "akschur/qone.hpp"
#include "akschur/report.hpp"
#include "akschur/shifted_action.hpp"
#include "akschur/suites.hpp"

namespace akschur {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

using json = nlohmann::json;

json tally_json(const Tally& t) {
    return {{"instances", t.instances}, {"failed", t.failed}, {"failures", t.failures}};
}

CheckResult from_tally(const Tally& t) {
    CheckResult c;
    c.values = tally_json(t);
    if (t.instances == 0) {
        c.status = Status::skipped;
        c.detail = "no instances at this size";
    } else {
        c.status = t.ok() ? Status::pass : Status::fail;
    }
    return c;
}

CheckResult skipped(const std::string& why) {
    CheckResult c;
    c.status = Status::skipped;
    c.detail = why;
    return c;
}

CheckResult cap(const std::string& why) {
    CheckResult c = skipped(why);
    c.values["cap"] = true;
    return c;
}

int flat_m(const RunConfig& cfg) { return std::accumulate(cfg.m_parts.begin(), cfg.m_parts.end(), 0); }

std::string key(const RunConfig& cfg) {
    std::string s = std::to_string(cfg.n) + "/" + std::to_string(cfg.r) + "/" + std::to_string(cfg.prime) + "/" +
                    std::to_string(cfg.seed) + "/";
    for (int x : cfg.m_parts) s += std::to_string(x) + ",";
    return s;
}

// Shared results for checks reading different parts of one computation.
template <class T>
std::shared_future<T> memo(const std::string& k, std::function<T()> f) {
    static std::mutex mu;
    static std::map<std::string, std::shared_future<T>> cache;
    std::packaged_task<T()> task;
    std::shared_future<T> fut;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        task = std::packaged_task<T()>(std::move(f));
        fut = task.get_future().share();
        cache.emplace(k, fut);
    }
    task();
    return fut;
}

std::size_t weight_space_dim(const RunConfig& cfg) {
    std::size_t d = 0;
    for (const auto& mu : enumerate_multicompositions(cfg.n, cfg.m_parts))
        d += static_cast<std::size_t>(expected_dim(mu, ModuleKind::quotient, cfg.r));
    return d;
}

std::size_t tensor_dim(const RunConfig& cfg) {
    QOneSpace V(cfg.m_parts);
    std::size_t d = 1;
    for (int s = 0; s < cfg.n; ++s) d *= V.dim();
    return d;
}

// dim of the sum of the x_mu blocks: m^n r^n
std::size_t tilde_dim(const RunConfig& cfg) {
    std::size_t d = 1;
    for (int s = 0; s < cfg.n; ++s) d *= static_cast<std::size_t>(flat_m(cfg) * cfg.r);
    return d;
}

std::optional<CheckResult> stability_cap(const RunConfig& cfg) {
    if (cfg.r < 2) return skipped("I-span degenerates at r = 1");
    if (tilde_dim(cfg) > 8 * cfg.dense_cap) return cap("tilde dimension above cap " + std::to_string(8 * cfg.dense_cap));
    return std::nullopt;
}

std::shared_ptr<StabilityReport> stability_of(const RunConfig& cfg) {
    auto fut = memo<std::shared_ptr<StabilityReport>>("stab" + key(cfg), [cfg] {
        return std::make_shared<StabilityReport>(stability(cfg.n, cfg.r, cfg.m_parts, cfg.prime, cfg.seed));
    });
    return fut.get();
}

std::shared_ptr<QOneReport> q_one_of(const RunConfig& cfg) {
    return memo<std::shared_ptr<QOneReport>>("q1" + key(cfg), [cfg] {
               return std::make_shared<QOneReport>(q_one_theorem(cfg.n, cfg.m_parts, cfg.prime, cfg.seed));
           })
        .get();
}

std::optional<CheckResult> q_one_cap(const RunConfig& cfg) {
    if (tensor_dim(cfg) > cfg.dense_cap || weight_space_dim(cfg) > cfg.dense_cap)
        return cap("dense dimension above cap " + std::to_string(cfg.dense_cap));
    return std::nullopt;
}

json dc_json(std::size_t commutant, std::size_t rho, std::size_t sigma, std::size_t H) {
    return {{"commutant", commutant}, {"image_rho", rho}, {"image_sigma", sigma}, {"dim_H", H}};
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;

    c.push_back({"thm-AK-basis", "identities", "{L^k T_w : 0 <= k_i < r, w in S_n} is a basis of H_{n,r}", "specialized",
                 [](const RunConfig& cfg) {
                     auto rep = basis_theorem(cfg.n, cfg.r, cfg.prime, cfg.seed);
                     CheckResult out;
                     out.status = rep.ok() ? Status::pass : Status::fail;
                     out.values = {{"expected", rep.expected},        {"ranks_LT", rep.ranks_LT},
                                   {"ranks_TL", rep.ranks_TL},        {"relations_exact", rep.relations_exact},
                                   {"left_right_commute", rep.associative}};
                     return out;
                 }});
    for (const auto& ic : identity_checks()) {
        const auto id = ic.id;
        c.push_back({ic.id, "identities", ic.anchor, "exact", [id](const RunConfig& cfg) {
                         AKAlgebra<ParamPoly> A(generic_params(cfg.n, cfg.r));
                         return from_tally(run_identity(id, A));
                     }});
    }

    c.push_back({"thm-def-rel-mmu", "modules",
                 "dim H - dim I^mu = dim M^mu = |S^mu| prod c_j and dim H - dim I~^mu = |S^mu| r^n", "specialized",
                 [](const RunConfig& cfg) {
                     auto rep = defining_relations(cfg.n, cfg.r, cfg.m_parts, cfg.prime, cfg.seed);
                     CheckResult out;
                     out.status = rep.ok() ? Status::pass : Status::fail;
                     json w = json::array();
                     for (const auto& x : rep.weights)
                         w.push_back({{"mu", x.mu.to_string()},
                                      {"expected_M", x.expected_quotient},
                                      {"expected_Mt", x.expected_tilde},
                                      {"dim_M", x.dim_M},
                                      {"dim_I", x.dim_I},
                                      {"dim_Mt", x.dim_Mt},
                                      {"dim_It", x.dim_It},
                                      {"kills_relations", x.kills_relations},
                                      {"ok", x.ok(rep.dim_H)}});
                     out.values = {{"dim_H", rep.dim_H}, {"weights", w.size()}, {"per_weight", w}};
                     return out;
                 }});

    c.push_back({"prop-bimodule-commutation", "shifted",
                 "every realized generator commutes with right multiplication by T_0, ..., T_{n-1}", "exact+specialized",
                 [](const RunConfig& cfg) {
                     const bool exact = cfg.exactness == Exactness::exact ||
                                        (cfg.exactness == Exactness::both && cfg.n <= 2);
                     auto rep = bimodule_commutation(cfg.n, cfg.r, cfg.m_parts, cfg.prime, cfg.seed, exact);
                     Tally all = rep.exact;
                     all.merge(rep.specialized);
                     CheckResult out = from_tally(all);
                     out.values = {{"exact", tally_json(rep.exact)}, {"specialized", tally_json(rep.specialized)},
                                   {"exact_run", exact}};
                     return out;
                 }});
    c.push_back({"shifted-f1-routes", "shifted", "[2] f_{i,1} v = -[h_{i,1}, f_{i,0}] v on the x_mu blocks", "exact",
                 [](const RunConfig& cfg) { return from_tally(f1_routes(cfg.n, cfg.r, cfg.m_parts)); }});
    c.push_back({"shifted-low-mode-relations", "shifted",
                 "[e_i, f_j] = 0 (i != j); (q - q^{-1})[e_i, f_i] = psi+ - psi- (b_i = 0); Serre; [h, h] = 0",
                 "specialized", [](const RunConfig& cfg) {
                     return from_tally(low_mode_relations(cfg.n, cfg.r, cfg.m_parts, cfg.prime, cfg.seed));
                 }});
    c.push_back({"cor-stability-dichotomy", "shifted",
                 "twisted action keeps the I-span of the x_mu blocks; untwisted f_i leaves it at every boundary",
                 "specialized", [](const RunConfig& cfg) {
                     if (auto c = stability_cap(cfg)) return *c;
                     const auto rep = *stability_of(cfg);
                     Tally all = rep.span_dims;
                     all.merge(rep.twisted_stable);
                     all.merge(rep.boundary_escape);
                     CheckResult out = from_tally(all);
                     if (rep.boundary_instances == 0) out.status = Status::fail;
                     out.values = {{"span_dims", tally_json(rep.span_dims)},
                                   {"twisted_stable", tally_json(rep.twisted_stable)},
                                   {"boundary_escape", tally_json(rep.boundary_escape)},
                                   {"boundary_instances", rep.boundary_instances}};
                     return out;
                 }});
    c.push_back({"remark-ek-stability", "shifted", "untwisted e_{i,0} and psi keep the I-span", "specialized",
                 [](const RunConfig& cfg) {
                     if (auto c = stability_cap(cfg)) return *c;
                     CheckResult out = from_tally(stability_of(cfg)->untwisted_ek);
                     // a failure here falsifies our reading of the remark
                     if (out.status == Status::fail) out.status = Status::inconclusive;
                     return out;
                 }});

    c.push_back({"schur-generators-match", "schur", "rho(e_{i,0}) = SE_i and rho(f_{i,0}) = SF_i", "exact",
                 [](const RunConfig& cfg) { return from_tally(schur_generators_match(cfg.n, cfg.r, cfg.m_parts)); }});
    c.push_back({"lemma-K-lambda", "schur", "K^lambda m_mu = delta_{lambda mu} m_mu", "exact",
                 [](const RunConfig& cfg) { return from_tally(k_lambda_idempotents(cfg.n, cfg.m_parts)); }});
    c.push_back({"thm-SW-double-centralizer", "schur",
                 "dim Im rho = dim End_{H^op}(sum M^mu) and dim Im sigma = dim H_{n,r}", "specialized",
                 [](const RunConfig& cfg) {
                     if (weight_space_dim(cfg) > cfg.dense_cap)
                         return cap("dense dimension above cap " + std::to_string(cfg.dense_cap));
                     auto rep = double_centralizer(cfg.n, cfg.r, cfg.m_parts, cfg.prime, cfg.seed);
                     CheckResult out;
                     out.status = rep.ok() ? Status::pass : Status::fail;
                     out.values = dc_json(rep.commutant, rep.image_rho, rep.image_sigma, rep.dim_H);
                     out.values["dim_W"] = rep.dim_W;
                     out.values["stable_across_points"] = rep.stable_across_points;
                     bool small = false;
                     for (int mk : cfg.m_parts)
                         if (mk < cfg.n) small = true;
                     if (small) {
                         // the equalities are only claimed for m_k >= n
                         out.status = Status::inconclusive;
                         out.detail = "m_k < n: dimensions reported without interpretation";
                     }
                     return out;
                 }});

    c.push_back({"lie-relations", "lie", "(L1)-(L5) hold for iota-images in L sl_m, modes |t| <= 2", "exact",
                 [](const RunConfig& cfg) {
                     const int m = flat_m(cfg);
                     if (m < 2 || m - 1 > kMaxEta) return skipped("needs 2 <= m <= 4");
                     return from_tally(lie_relations(m, shift_vector(cfg.m_parts), 2));
                 }});
    c.push_back({"lie-relations-sweep", "lie", "(L1)-(L5) for all m <= 4 and b in {0,1}^{m-1}, modes |t| <= 2",
                 "exact", [](const RunConfig&) {
                     Tally all;
                     for (int m = 2; m <= 4; ++m)
                         for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
                             std::vector<int> b(static_cast<std::size_t>(m - 1));
                             for (int i = 0; i < m - 1; ++i) b[static_cast<std::size_t>(i)] = (mask >> i) & 1;
                             all.merge(lie_relations(m, b, 2));
                         }
                     return from_tally(all);
                 }});
    c.push_back({"lie-jacobi", "lie", "Jacobi, antisymmetry and degree windows of the loop bracket", "exact",
                 [](const RunConfig& cfg) {
                     const int m = std::max(2, std::min(flat_m(cfg), 4));
                     return from_tally(lie_jacobi(m, 200, 4, cfg.seed));
                 }});
    c.push_back({"lie-basis-window", "lie",
                 "iota(cE^{[b]}_{(i,j),t}), |t| <= 3, independent; upper = cE^{[0]}, lower triangular", "specialized",
                 [](const RunConfig& cfg) {
                     const int m = flat_m(cfg);
                     if (m < 2 || m - 1 > kMaxEta) return skipped("needs 2 <= m <= 4");
                     auto rep = lie_basis_window(m, shift_vector(cfg.m_parts), 3);
                     CheckResult out;
                     out.status = rep.ok() ? Status::pass : Status::fail;
                     out.values = {{"expected", rep.expected},
                                   {"rank", rep.rank},
                                   {"per_family", rep.per_family},
                                   {"upper", tally_json(rep.upper)},
                                   {"triangular", tally_json(rep.triangular)}};
                     return out;
                 }});
    c.push_back({"lie-cartan-translation", "lie", "Psi Phi = id on H_t, K^+-; Phi Psi = id on psi^+-_t; b <= 3, |t| <= 6",
                 "formal", [](const RunConfig&) {
                     Tally all;
                     for (int b = 0; b <= 3; ++b) all.merge(cartan_translation(b, 6));
                     return from_tally(all);
                 }});
    c.push_back({"lie-zeta-example", "lie", "zeta_3(6) = 2, zeta_3(5) = 1, zeta_3(2) = 0 and H_t for b = 3", "formal",
                 [](const RunConfig&) { return from_tally(zeta_examples()); }});

    c.push_back({"q1-module-iso", "q1", "m_mu -> v'_mu: v'_mu killed by the relations, block dims agree, Phi invertible",
                 "exact+specialized", [](const RunConfig& cfg) {
                     if (auto c = q_one_cap(cfg)) return *c;
                     auto rep = q_one_of(cfg);
                     Tally all = rep->relations;
                     all.merge(rep->block_dims);
                     CheckResult out = from_tally(all);
                     out.values = {{"relations", tally_json(rep->relations)}, {"block_dims", tally_json(rep->block_dims)}};
                     return out;
                 }});
    c.push_back({"q1-intertwining", "q1", "E_{i,0}, F_{i,0}, F_{i,1}, H_{i,0}, H_{i,+-1} and T_g intertwine through m_mu -> v'_mu",
                 "exact+specialized", [](const RunConfig& cfg) {
                     if (auto c = q_one_cap(cfg)) return *c;
                     auto rep = q_one_of(cfg);
                     Tally all = rep->intertwining;
                     all.merge(rep->matrices);
                     CheckResult out = from_tally(all);
                     out.values = {{"intertwining", tally_json(rep->intertwining)},
                                   {"matrices", tally_json(rep->matrices)},
                                   {"printed_h1_matches", rep->printed_h1_matches}};
                     return out;
                 }});
    c.push_back({"q1-commutation", "q1", "Lie generators commute with the right H^{q=1} action on V^{(x)n}", "exact",
                 [](const RunConfig& cfg) {
                     if (auto c = q_one_cap(cfg)) return *c;
                     return from_tally(q_one_of(cfg)->commutation);
                 }});
    c.push_back({"thm-SW-SLA-double-centralizer", "q1",
                 "q = 1 double centralizer on V^{(x)n}, dimensions equal to the generic ones", "specialized",
                 [](const RunConfig& cfg) {
                     if (auto c = q_one_cap(cfg)) return *c;
                     auto rep = q_one_of(cfg);
                     CheckResult out;
                     out.status = rep->ok() ? Status::pass : Status::fail;
                     out.values = {{"q1", dc_json(rep->commutant, rep->image_rho, rep->image_sigma, rep->dim_H)},
                                   {"generic", dc_json(rep->generic_commutant, rep->generic_image_rho,
                                                       rep->generic_image_sigma, rep->dim_H)}};
                     return out;
                 }});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = build_catalog();
    return c;
}

std::string validate(const RunConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 4) return "--n must be in 1..4";
    if (cfg.r < 1 || cfg.r > kMaxQ) return "--r must be in 1.." + std::to_string(kMaxQ);
    if (static_cast<int>(cfg.m_parts.size()) != cfg.r) return "--m-parts must have r entries";
    for (int x : cfg.m_parts)
        if (x < 1) return "--m-parts entries must be positive";
    if (cfg.prime < (1ULL << 20)) return "--prime must exceed 2^20";
    for (const auto& s : cfg.suites) {
        bool known = false;
        for (const auto& e : catalog()) known = known || e.suite == s;
        if (!known) return "unknown suite " + s;
    }
    for (const auto& id : cfg.ids) {
        bool known = false;
        for (const auto& e : catalog()) known = known || e.id == id;
        if (!known) return "unknown check " + id;
    }
    return {};
}

int RunReport::exit_code() const {
    for (const auto& c : checks)
        if (c.status == Status::fail) return 1;
    return cap_hit ? 3 : 0;
}

nlohmann::json RunReport::to_json(bool with_timing) const {
    json cfg = {{"n", config.n},
                {"r", config.r},
                {"m_parts", config.m_parts},
                {"prime", config.prime},
                {"seed", config.seed},
                {"suites", config.suites},
                {"exactness", config.exactness == Exactness::exact         ? "exact"
                              : config.exactness == Exactness::specialized ? "specialized"
                                                                           : "both"}};
    json list = json::array();
    std::map<std::string, int> counts;
    for (const auto& c : checks) {
        json j = {{"id", c.id},
                  {"suite", c.suite},
                  {"anchor", c.anchor},
                  {"status", to_string(c.status)},
                  {"values", c.values},
                  {"detail", c.detail}};
        if (with_timing) j["seconds"] = c.seconds;
        list.push_back(std::move(j));
        ++counts[to_string(c.status)];
    }
    json summary = {{"total", checks.size()}, {"cap_hit", cap_hit}};
    for (const auto& [k, v] : counts) summary[k] = v;
    json out = {{"schema_version", 1}, {"config", cfg}, {"checks", list}, {"summary", summary}};
    if (with_timing) out["seconds"] = seconds;
    return out;
}

RunReport run(const RunConfig& cfg) {
    RunReport rep;
    rep.config = cfg;
    std::vector<const CatalogEntry*> todo;
    for (const auto& e : catalog()) {
        const bool suite_ok = cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), e.suite) != cfg.suites.end();
        const bool id_ok = cfg.ids.empty() || std::find(cfg.ids.begin(), cfg.ids.end(), e.id) != cfg.ids.end();
        if (suite_ok && id_ok) todo.push_back(&e);
    }
    rep.checks.resize(todo.size());
    int workers = cfg.workers;
    if (workers <= 0) {
        if (const char* env = std::getenv("AKSCHUR_WORKERS")) workers = std::atoi(env);
        if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    workers = std::min<int>(workers, static_cast<int>(std::max<std::size_t>(todo.size(), 1)));
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
    std::atomic<std::size_t> next{0};
    std::atomic<bool> budget_hit{false};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < todo.size();) {
            const auto& e = *todo[k];
            CheckResult res;
            const auto t0 = std::chrono::steady_clock::now();
            if (cfg.time_budget > 0 && elapsed() > cfg.time_budget) {
                res = skipped("time budget exhausted");
                res.values["cap"] = true;
                budget_hit = true;
            } else {
                try {
                    res = e.fn(cfg);
                } catch (const std::exception& ex) {
                    res.status = Status::fail;
                    res.detail = std::string("error: ") + ex.what();
                }
            }
            res.id = e.id;
            res.suite = e.suite;
            res.anchor = e.anchor;
            res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rep.checks[k] = std::move(res);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    rep.seconds = elapsed();
    rep.cap_hit = budget_hit;
    for (const auto& c : rep.checks)
        if (c.values.is_object() && c.values.contains("cap")) rep.cap_hit = true;
    return rep;
}

}  // namespace akschur
