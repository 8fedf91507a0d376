#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tracecode/gf.hpp"
#include "tracecode/printed_theorem.hpp"
#include "tracecode/wmap.hpp"

namespace tracecode {

/// D = { x in F_q^* : Tr(x^((q-1)/N) + beta x) = alpha }, listed as g^t in increasing t.
struct DefiningSet {
    std::vector<std::uint64_t> exponents;
    std::vector<Felem> elements;

    std::size_t size() const noexcept { return elements.size(); }
    bool empty() const noexcept { return elements.empty(); }
};

DefiningSet defining_set(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta);

/// (q - 1 + w(alpha, beta)) / p.
std::int64_t code_length_closed(const FieldParams& params, std::int64_t alpha, XDescriptor beta_class);

/// (Tr(d_1 gamma), ..., Tr(d_n gamma)).
std::vector<std::uint32_t> codeword(const FieldCtx& ctx, const DefiningSet& D, const Felem& gamma);

/// Hamming weight of c_gamma from the w-values:
/// ((p-1)q + (p-1)w(alpha,beta) - sum_{z in F_p^*} w(alpha, beta + z gamma)) / p^2.
std::int64_t weight_closed(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta, const Felem& gamma);

/// Rank over F_p of the e x n matrix whose columns are the trace functionals of the d_i.
std::int64_t generator_rank(const FieldCtx& ctx, const DefiningSet& D);

struct WeightDistribution {
    std::map<std::int64_t, std::int64_t> entries;  // weight >= 1 -> count
    std::int64_t n = 0;
    std::int64_t k = 0;            // log_p(#distinct codewords), measured
    std::int64_t kernel_size = 1;  // #{gamma : c_gamma = 0}, including gamma = 0

    std::int64_t total() const;
    std::int64_t weighted_total() const;
};

/// Exact weight distribution over all gamma in F_q^*, split across `threads` workers.
/// The result does not depend on the worker count.
WeightDistribution weight_distribution_brute(const FieldCtx& ctx, const DefiningSet& D, unsigned threads = 1);
WeightDistribution weight_distribution_brute(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta,
                                             unsigned threads = 1);

struct Prediction {
    std::string branch_id;
    std::int64_t n = 0;
    std::int64_t k = 0;
    bool empty = false;
    std::vector<std::int64_t> weights;  // ascending, distinct
    std::optional<std::map<std::int64_t, std::int64_t>> enumerators;

    // Bookkeeping for beta != 0: weight of c_gamma for gamma in {-z^{-1} beta}, and the
    // p candidate weights ((p-1)q + c (w(alpha,beta) - B)) / p^2, c = p-1-k for k = 0..p-1,
    // where B is the other value w takes on F_q^* (possibly only on an empty class).
    std::optional<std::int64_t> gamma_weight;
    std::vector<std::int64_t> family;
};

/// Label of the case of the weight-distribution theorem selected by (alpha, beta class).
std::string theorem_branch(const FieldParams& params, std::int64_t alpha, XDescriptor beta_class);

/// Length, dimension, possible weights and (where determined) the enumerator, obtained by
/// composing the closed-form w-values with the weight formula.
Prediction predict(const FieldParams& params, std::int64_t alpha, XDescriptor beta_class);

struct CodeChecks {
    bool length_match = false;
    bool weights_subset = false;
    std::optional<bool> enumerators_match;
    bool injective = false;
    bool sum_identities = false;
    bool weight_count_bound = false;  // at most p + 1 distinct weights
    bool length_integrality = false;  // p | (q - 1 + w(alpha, beta))

    bool all_pass() const;
};

struct CodeVerification {
    std::int64_t alpha = 0;
    XDescriptor beta_class;
    std::optional<std::int64_t> j_beta;
    DefiningSet D;
    WeightDistribution dist;
    Prediction prediction;
    PrintedComparison printed;
    CodeChecks checks;
    std::int64_t generator_rank = 0;
};

CodeVerification verify_code(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta, unsigned threads = 1);

/// Notes every quantity where the published theorem disagrees with `derived`.
PrintedComparison compare_with_printed(const Prediction& derived, const PrintedPrediction& printed);

/// The published theorem read at the case selected by effective_descriptor(), plus
/// a note when the literal class routing selects a different case.
PrintedComparison printed_comparison(const FieldParams& params, std::int64_t alpha, XDescriptor beta_class,
                                     const Prediction& derived);

/// Checks of a brute distribution against a prediction; shared by verify_code and the driver.
CodeChecks compare_distribution(const FieldParams& params, const WeightDistribution& dist,
                                const Prediction& prediction, std::int64_t w_alpha_beta);

} // namespace tracecode
