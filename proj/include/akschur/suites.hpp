#pragma once

// Verification suites over the engines; implemented in src/ and shared by the CLI, the
// unit tests and the acceptance runner.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ariki_koike.hpp"
#include "combinatorics.hpp"
#include "param_poly.hpp"

namespace akschur {

// Count of checked instances with the labels of the first failures.
struct Tally {
    std::size_t instances = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;

    void record(bool ok, const std::string& label);
    void merge(const Tally& other);
    bool ok() const { return failed == 0; }
};

// ---- identities in H_{n,r} (exact, ParamPoly coefficients) ----

struct IdentityCheck {
    std::string id;
    std::string anchor;
    Tally (*run)(const AKAlgebra<ParamPoly>&);
};

const std::vector<IdentityCheck>& identity_checks();
Tally run_identity(const std::string& id, const AKAlgebra<ParamPoly>& A);

struct BasisReport {
    int n = 0, r = 0;
    std::size_t expected = 0;
    std::vector<std::size_t> ranks_LT;  // L^k T_w built from generator words, per point
    std::vector<std::size_t> ranks_TL;  // T_w L^k, per point
    bool relations_exact = false;       // defining relations on the regular representation
    bool associative = false;           // left and right regular actions commute at every point
    bool ok() const;
};
BasisReport basis_theorem(int n, int r, std::uint64_t prime, std::uint64_t seed);

// ---- modules M^mu and M~^mu ----

struct WeightDims {
    MultiComposition mu;
    long long expected_quotient = 0, expected_tilde = 0;
    std::vector<long long> dim_M, dim_I, dim_Mt, dim_It;  // per point
    bool kills_relations = false;  // m_mu and x_mu annihilate their relation generators
    bool ok(long long dim_H) const;
};
struct DefiningRelationsReport {
    long long dim_H = 0;
    std::vector<WeightDims> weights;
    bool ok() const;
};
DefiningRelationsReport defining_relations(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime,
                                           std::uint64_t seed);

// ---- shifted quantum affine action on the weight blocks ----

struct CommutationReport {
    Tally exact;        // relation ideal killed exactly (n <= 2)
    Tally specialized;  // matrix commutation with right T_g at each point
    bool ok() const { return exact.ok() && specialized.ok(); }
};
CommutationReport bimodule_commutation(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime,
                                       std::uint64_t seed, bool exact);

// f_{i,1} on the tilde blocks: direct formula times [2] against the commutator with h_{i,1}
Tally f1_routes(int n, int r, const std::vector<int>& m_parts);

// mode-0 relations among the realized operators: [e_i, f_j] = 0 (i != j), [e_i, f_i]
// block-diagonal and equal to (psi+ - psi-)/(q - q^{-1}) when b_i = 0, Serre at mode 0,
// and commuting h_{i,+-1}, psi-
Tally low_mode_relations(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime, std::uint64_t seed);

struct StabilityReport {
    Tally span_dims;        // dim I-span = dim M~ - dim M
    Tally twisted_stable;   // twisted generators keep the I-span
    Tally boundary_escape;  // untwisted f_{i,0} leaves it at each boundary instance
    std::size_t boundary_instances = 0;
    Tally untwisted_ek;     // untwisted e_{i,0} and psi keep it
    bool ok() const { return span_dims.ok() && twisted_stable.ok() && boundary_escape.ok() && boundary_instances > 0; }
};
StabilityReport stability(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime, std::uint64_t seed);

// K^lambda acts on the block mu by delta_{lambda mu}
Tally k_lambda_idempotents(int n, const std::vector<int>& m_parts);

// rho(e_{i,0}) = SE_i and rho(f_{i,0}) = SF_i on every block, exactly
Tally schur_generators_match(int n, int r, const std::vector<int>& m_parts);

struct DoubleCentralizerReport {
    std::size_t dim_W = 0;
    std::size_t commutant = 0;
    std::size_t image_rho = 0;
    std::size_t image_sigma = 0;
    std::size_t dim_H = 0;
    bool stable_across_points = true;
    bool ok() const { return commutant == image_rho && image_sigma == dim_H && stable_across_points; }
};
DoubleCentralizerReport double_centralizer(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime,
                                           std::uint64_t seed);

// ---- loop Lie side ----

Tally lie_relations(int m, const std::vector<int>& b, int window);
Tally lie_jacobi(int m, int samples, int window, std::uint64_t seed);
struct BasisWindowReport {
    std::size_t expected = 0, rank = 0;
    std::map<std::string, std::size_t> per_family;
    Tally upper;       // iota(cE^{[b]}_{(i,j),t}) = cE^{[0]}_{(i,j),t} for i <= j
    Tally triangular;  // leading term cE^{[0]}_{(i,j),t} plus higher degrees for i > j
    bool ok() const { return rank == expected && upper.ok() && triangular.ok(); }
};
BasisWindowReport lie_basis_window(int m, const std::vector<int>& b, int window);
Tally cartan_translation(int b, int window);
Tally zeta_examples();

// ---- q = 1 tensor space ----

struct QOneReport {
    Tally relations;       // v'_mu killed by T_s - 1 and L_j^{<c_j>}
    Tally block_dims;      // dim V^{(x)n}_mu = dim M^mu = |S^mu| prod c_j
    Tally intertwining;    // generator images on cyclic vectors
    Tally commutation;     // Lie generators commute with the right action on V^{(x)n}
    Tally matrices;        // intertwining of the full block operators at each point
    bool printed_h1_matches = true;  // (mu_i - mu_{i+1}) factor and sign of the printed h_{i,1} formula
    std::size_t commutant = 0, image_rho = 0, image_sigma = 0, dim_H = 0;
    std::size_t generic_commutant = 0, generic_image_rho = 0, generic_image_sigma = 0;
    bool ok() const;
};
QOneReport q_one_theorem(int n, const std::vector<int>& m_parts, std::uint64_t prime, std::uint64_t seed);

}  // namespace akschur
