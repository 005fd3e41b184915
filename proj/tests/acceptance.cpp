// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact (integer
// ranks, Laurent polynomial or F_p equality); the only tolerances are the wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "akschur/loop_lie.hpp"
#include "akschur/report.hpp"
#include "akschur/shifted_action.hpp"
#include "akschur/suites.hpp"

using namespace akschur;

namespace {

constexpr std::uint64_t kPrime = kDefaultPrime;
constexpr std::uint64_t kSeed = 1;

// wall-clock limits in seconds; 0 = none
constexpr double kLimitBasis = 30;
constexpr double kLimitIdentities = 300;
constexpr double kLimitDoubleCentralizer = 120;

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.size() < 300) detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int k, const char* name, double limit, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit) o.require(false, "time " + std::to_string(secs) + " s over " + std::to_string(limit) + " s");
    if (!o.ok) ++failures;
    std::printf("%s criterion %2d %-28s %8.2f s%s%s\n", o.ok ? "PASS" : "FAIL", k, name, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

std::string cfg_name(int n, int r, const std::vector<int>& m) {
    std::string s = "(" + std::to_string(n) + "," + std::to_string(r) + ",(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + "))";
}

std::string tally_msg(const std::string& where, const Tally& t) {
    std::string s = where + ": " + std::to_string(t.failed) + "/" + std::to_string(t.instances) + " failed";
    if (!t.failures.empty()) s += " first " + t.failures.front();
    return s;
}

DoubleCentralizerReport dc22;

}  // namespace

int main() {
    criterion(1, "AK basis", kLimitBasis, [] {
        Outcome o;
        const std::vector<std::pair<int, int>> cases{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}, {2, 3}};
        for (auto [n, r] : cases) {
            auto rep = basis_theorem(n, r, kPrime, kSeed);
            o.require(rep.ok() && rep.ranks_LT.size() == 3, "basis (" + std::to_string(n) + "," + std::to_string(r) + ")");
        }
        return o;
    });

    criterion(2, "identity sweep", kLimitIdentities, [] {
        Outcome o;
        for (const auto& ic : identity_checks()) {
            Tally all;
            for (int n = 1; n <= 3; ++n)
                for (int r = 1; r <= 3; ++r) {
                    AKAlgebra<ParamPoly> A(generic_params(n, r));
                    all.merge(ic.run(A));
                }
            o.require(all.ok() && all.instances > 0, tally_msg(ic.id, all));
        }
        return o;
    });

    criterion(3, "defining relations", 0, [] {
        Outcome o;
        const std::vector<std::tuple<int, int, std::vector<int>, std::size_t>> cases{{2, 2, {2, 2}, 10},
                                                                                     {3, 2, {3, 3}, 56}};
        for (const auto& [n, r, m, weights] : cases) {
            auto rep = defining_relations(n, r, m, kPrime, kSeed);
            o.require(rep.weights.size() == weights, cfg_name(n, r, m) + " weight count");
            o.require(rep.ok(), cfg_name(n, r, m) + " dimensions");
        }
        return o;
    });

    criterion(4, "bimodule commutation", 0, [] {
        Outcome o;
        const std::vector<std::tuple<int, int, std::vector<int>>> cases{
            {1, 2, {1, 1}}, {2, 1, {2}}, {2, 2, {2, 2}}, {2, 2, {1, 2}}, {3, 2, {3, 3}}};
        for (const auto& [n, r, m] : cases) {
            auto rep = bimodule_commutation(n, r, m, kPrime, kSeed, n <= 2);
            if (n <= 2) o.require(rep.exact.ok() && rep.exact.instances > 0, tally_msg(cfg_name(n, r, m) + " exact", rep.exact));
            o.require(rep.specialized.ok() && rep.specialized.instances > 0,
                      tally_msg(cfg_name(n, r, m) + " specialized", rep.specialized));
        }
        return o;
    });

    criterion(5, "stability dichotomy", 0, [] {
        Outcome o;
        const std::vector<std::pair<int, std::vector<int>>> cases{{1, {1, 1}}, {2, {1, 1}}, {2, {2, 2}}, {2, {1, 2}}};
        for (const auto& [n, m] : cases) {
            auto rep = stability(n, 2, m, kPrime, kSeed);
            const auto name = cfg_name(n, 2, m);
            o.require(rep.span_dims.ok(), tally_msg(name + " I-span dims", rep.span_dims));
            o.require(rep.twisted_stable.ok(), tally_msg(name + " twisted", rep.twisted_stable));
            o.require(rep.boundary_escape.ok(), tally_msg(name + " untwisted escape", rep.boundary_escape));
            o.require(rep.boundary_instances > 0, name + " no boundary instance");
        }
        return o;
    });

    criterion(6, "K^lambda idempotents", 0, [] {
        Outcome o;
        const std::vector<std::pair<int, std::vector<int>>> cases{{1, {1}}, {1, {2}}, {2, {2}}, {1, {1, 1}},
                                                                  {2, {1, 1}}, {2, {2, 2}}, {2, {1, 2}}};
        for (const auto& [n, m] : cases) {
            auto t = k_lambda_idempotents(n, m);
            o.require(t.ok() && t.instances > 0, tally_msg(cfg_name(n, static_cast<int>(m.size()), m), t));
        }
        return o;
    });

    criterion(7, "double centralizer", kLimitDoubleCentralizer, [] {
        Outcome o;
        auto small = double_centralizer(1, 2, {1, 1}, kPrime, kSeed);
        o.require(small.ok(), "(1,2,(1,1)) equalities");
        o.require(small.commutant == 5 && small.image_rho == 5, "(1,2,(1,1)) expected 5 = 5, got " +
                                                                     std::to_string(small.image_rho) + " and " +
                                                                     std::to_string(small.commutant));
        o.require(small.image_sigma == 2, "(1,2,(1,1)) Im sigma");
        dc22 = double_centralizer(2, 2, {2, 2}, kPrime, kSeed);
        o.require(dc22.ok(), "(2,2,(2,2)) rho " + std::to_string(dc22.image_rho) + " commutant " +
                                 std::to_string(dc22.commutant) + " sigma " + std::to_string(dc22.image_sigma));
        return o;
    });

    criterion(8, "Schur generators", 0, [] {
        Outcome o;
        const std::vector<std::tuple<int, int, std::vector<int>>> cases{
            {1, 2, {1, 1}}, {2, 2, {2, 2}}, {2, 1, {3}}, {3, 1, {3}}, {3, 2, {3, 3}}, {3, 3, {1, 1, 1}}};
        for (const auto& [n, r, m] : cases) {
            auto t = schur_generators_match(n, r, m);
            o.require(t.ok() && t.instances > 0, tally_msg(cfg_name(n, r, m), t));
        }
        return o;
    });

    criterion(9, "Lie relations and Phi/Psi", 0, [] {
        Outcome o;
        for (int m = 2; m <= 4; ++m)
            for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
                std::vector<int> b(static_cast<std::size_t>(m - 1));
                for (int i = 0; i < m - 1; ++i) b[static_cast<std::size_t>(i)] = (mask >> i) & 1;
                auto t = lie_relations(m, b, 2);
                o.require(t.ok() && t.instances > 0, tally_msg("m=" + std::to_string(m) + " mask " + std::to_string(mask), t));
            }
        for (int b = 0; b <= 3; ++b) {
            auto t = cartan_translation(b, 6);
            o.require(t.ok() && t.instances > 0, tally_msg("Phi/Psi b=" + std::to_string(b), t));
        }
        auto z = zeta_examples();
        o.require(z.ok(), tally_msg("zeta example", z));
        o.require(zeta(3, 6) == 2, "zeta_3(6)");
        return o;
    });

    criterion(10, "q=1 theorem", 0, [] {
        Outcome o;
        for (int n = 1; n <= 2; ++n) {
            auto rep = q_one_theorem(n, {2, 2}, kPrime, kSeed);
            const auto name = cfg_name(n, 2, {2, 2});
            o.require(rep.relations.ok(), tally_msg(name + " relations", rep.relations));
            o.require(rep.block_dims.ok(), tally_msg(name + " block dims", rep.block_dims));
            o.require(rep.intertwining.ok(), tally_msg(name + " intertwining", rep.intertwining));
            o.require(rep.commutation.ok(), tally_msg(name + " commutation", rep.commutation));
            o.require(rep.matrices.ok(), tally_msg(name + " matrices", rep.matrices));
            o.require(rep.ok(), name + " double centralizer dims");
            if (n == 2)
                o.require(rep.commutant == dc22.commutant && rep.image_rho == dc22.image_rho &&
                              rep.image_sigma == dc22.image_sigma,
                          name + " dims differ from criterion 7");
        }
        return o;
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
