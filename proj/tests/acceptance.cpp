// Acceptance run: one PASS/FAIL line per criterion.
// All comparisons are exact integer or exact Z[zeta_p] equality; the only
// tolerances are the wall-clock budgets below.
//
// usage: tracecode_acceptance [path-to-tracecode-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "tracecode/driver.hpp"
#include "tracecode/dual.hpp"
#include "tracecode/error.hpp"
#include "tracecode/weil.hpp"
#include "tracecode/wmap.hpp"

using namespace tracecode;
using Dist = std::map<std::int64_t, std::int64_t>;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetGolden = 30;
constexpr double kBudgetWeil = 60;
constexpr double kBudgetW = 300;
constexpr double kBudgetLarge = 600;
constexpr unsigned kLargeWorkers = 4;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok)
            detail = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond)
            fail(why);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string str(const Dist& d) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [w, c] : d) {
        os << (first ? "" : ", ") << w << ':' << c;
        first = false;
    }
    os << '}';
    return os.str();
}

// b with j_b = j
Felem with_j(const FieldCtx& ctx, std::int64_t j) { return ctx.g_power(-j); }

struct Code {
    std::string label;
    const FieldCtx* ctx;
    std::int64_t alpha;
    Felem beta;
    WeightDistribution dist;
};

int trace_of_gamma(const FieldCtx& ctx, const Felem& d, const Felem& gamma) {
    return static_cast<int>(ctx.trace(ctx.mul(d, gamma)));
}

// ---------------------------------------------------------------------------

struct Fields {
    FieldCtx f351 = FieldCtx::build(validate_params(3, 5, 1));
    FieldCtx f371 = FieldCtx::build(validate_params(3, 7, 1));
    FieldCtx f751 = FieldCtx::build(validate_params(7, 5, 1));
    FieldCtx f532 = FieldCtx::build(validate_params(5, 3, 2));
};

Outcome golden(const Fields& F, std::vector<Code>& codes) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        const char* label;
        const FieldCtx* ctx;
        std::int64_t alpha;
        bool beta_one;
        std::int64_t n, k;
        Dist dist;
    };
    const Case cases[] = {
        {"(3,7,1,1,1)", &F.f371, 1, true, 231, 6, {{135, 2}, {144, 132}, {153, 360}, {162, 234}}},
        {"(7,5,1,1,1)", &F.f751, 1, true, 323, 4,
         {{203, 6}, {259, 96}, {266, 420}, {273, 432}, {280, 924}, {287, 456}, {294, 66}}},
        {"(7,5,1,2,1)", &F.f751, 2, true, 343, 4, {{294, 2394}, {343, 6}}},
        {"(7,5,1,1,0)", &F.f751, 1, false, 960, 4, {{798, 960}, {840, 1440}}},
    };
    for (const auto& c : cases) {
        const Felem beta = c.beta_one ? c.ctx->one() : c.ctx->zero();
        auto d = weight_distribution_brute(*c.ctx, c.alpha, beta, 1);
        o.expect(d.n == c.n, std::string(c.label) + " n = " + std::to_string(d.n));
        o.expect(d.k == c.k, std::string(c.label) + " k = " + std::to_string(d.k));
        o.expect(d.entries == c.dist, std::string(c.label) + " distribution " + str(d.entries));
        codes.push_back({c.label, c.ctx, c.alpha, beta, std::move(d)});
    }
    const double s = seconds_since(t0);
    o.expect(s < kBudgetGolden, "took " + std::to_string(s) + " s");
    if (o.ok)
        o.detail = "4 examples exact, single worker, " + std::to_string(s).substr(0, 5) + " s";
    return o;
}

Outcome weil(const Fields& F) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::int64_t compared = 0;

    const auto& c = F.f351;
    for (std::int64_t a = 1; a < 3; ++a) {
        for (std::uint64_t v = 1; v < 81; ++v) {
            const Felem b = c.from_encoding(v);
            ++compared;
            o.expect(s_binomial_closed(c, a, b) == s_binomial_brute(c, c.from_int(a), b),
                     "(3,5,1) a = " + std::to_string(a) + ", b = " + c.format(b));
        }
    }
    o.expect(compared == 160, "(3,5,1) pair count");
    for (std::uint64_t v = 0; v < 81; ++v) {
        const Felem a = c.from_encoding(v);
        o.expect(s_binomial_brute(c, a, c.zero()) == s_single_brute(c, a).scaled(c.params().exp_d),
                 "S(a, 0) identity at a = " + c.format(a));
    }

    for (const FieldCtx* ctx : {&F.f371, &F.f751}) {
        const auto& fp = ctx->params();
        for (std::int64_t a = 1; a < fp.p; ++a) {
            o.expect(s_binomial_closed(*ctx, a, ctx->zero()) == s_binomial_brute(*ctx, ctx->from_int(a), ctx->zero()),
                     "b = 0");
            for (JClass cl : kAllJClasses) {
                const auto members = class_members(fp.ell, fp.m, cl);
                if (members.empty())
                    continue;
                const Felem rep = with_j(*ctx, members.front());
                for (std::int64_t z = 1; z < fp.p; ++z) {
                    const Felem b = ctx->scale(rep, z);
                    ++compared;
                    o.expect(s_binomial_closed(*ctx, a, b) == s_binomial_brute(*ctx, ctx->from_int(a), b),
                             "p = " + std::to_string(fp.p) + ", a = " + std::to_string(a) + ", class " +
                                 std::string(to_string(cl)) + ", z = " + std::to_string(z));
                }
            }
        }
    }
    const double s = seconds_since(t0);
    o.expect(s < kBudgetWeil, "took " + std::to_string(s) + " s");
    if (o.ok)
        o.detail = std::to_string(compared) + " closed/brute pairs and 81 S(a,0) identities exact";
    return o;
}

Outcome wvalues(const Fields& F) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::int64_t compared = 0;
    auto check = [&](const FieldCtx& ctx, std::int64_t alpha, const Felem& x) {
        ++compared;
        try {
            const auto closed = w_closed(ctx.params(), alpha, describe(ctx, x));
            const auto brute = w_brute(ctx, alpha, x);
            o.expect(closed == brute, "p = " + std::to_string(ctx.p()) + ", alpha = " + std::to_string(alpha) +
                                          ", x = " + ctx.format(x) + ": closed " + std::to_string(closed) +
                                          ", brute " + std::to_string(brute));
        } catch (const Error& e) {
            o.fail(e.what());
        }
    };
    for (const FieldCtx* ctx : {&F.f351, &F.f371}) {
        for (std::int64_t alpha = 0; alpha < ctx->p(); ++alpha) {
            for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(ctx->params().q); ++v)
                check(*ctx, alpha, ctx->from_encoding(v));
        }
    }
    for (const FieldCtx* ctx : {&F.f751, &F.f532}) {
        const auto& fp = ctx->params();
        for (std::int64_t alpha = 0; alpha < fp.p; ++alpha) {
            check(*ctx, alpha, ctx->zero());
            for (JClass cl : kAllJClasses) {
                const auto members = class_members(fp.ell, fp.m, cl);
                if (!members.empty())
                    check(*ctx, alpha, with_j(*ctx, members.front()));
            }
        }
    }
    const double s = seconds_since(t0);
    o.expect(s < kBudgetW, "took " + std::to_string(s) + " s");
    if (o.ok)
        o.detail = std::to_string(compared) + " w-values equal, all rational integers";
    return o;
}

Outcome large_case(const Fields& F, std::vector<Code>& codes) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto& ctx = F.f532;
    auto d = weight_distribution_brute(ctx, 0, ctx.zero(), kLargeWorkers);
    const Dist expected{{8300, 10416}, {8400, 5208}};
    o.expect(d.n == 10416, "n = " + std::to_string(d.n));
    o.expect(d.k == 6, "k = " + std::to_string(d.k));
    o.expect(d.entries == expected, "distribution " + str(d.entries));
    const auto pr = predict(ctx.params(), 0, std::nullopt);
    o.expect(pr.n == 10416 && pr.enumerators && *pr.enumerators == expected, "prediction " + pr.branch_id);
    const double s = seconds_since(t0);
    o.expect(s < kBudgetLarge, "took " + std::to_string(s) + " s");
    if (o.ok)
        o.detail = "(5,3,2) alpha = beta = 0: " + str(d.entries) + " with " + std::to_string(kLargeWorkers) +
                   " workers, " + std::to_string(s).substr(0, 5) + " s";
    codes.push_back({"(5,3,2,0,0)", &ctx, 0, ctx.zero(), std::move(d)});
    return o;
}

// Sweep codes: beta = 0 and one representative per nonempty class, every alpha.
void sweep_codes(const FieldCtx& ctx, std::vector<Code>& codes) {
    const auto& fp = ctx.params();
    for (std::int64_t alpha = 0; alpha < fp.p; ++alpha) {
        std::vector<Felem> betas{ctx.zero()};
        for (JClass cl : kAllJClasses) {
            const auto members = class_members(fp.ell, fp.m, cl);
            if (!members.empty())
                betas.push_back(with_j(ctx, members.front()));
        }
        for (const auto& b : betas) {
            auto d = weight_distribution_brute(ctx, alpha, b, 2);
            codes.push_back({"sweep p=" + std::to_string(fp.p) + " ell=" + std::to_string(fp.ell), &ctx, alpha, b,
                             std::move(d)});
        }
    }
}

Outcome structure(const std::vector<Code>& codes) {
    Outcome o;
    std::int64_t tested = 0;
    for (const auto& c : codes) {
        if (c.dist.n == 0)
            continue;
        ++tested;
        const auto& fp = c.ctx->params();
        const std::string where = c.label + " alpha = " + std::to_string(c.alpha) + ", beta = " + c.ctx->format(c.beta);
        try {
            std::int64_t count = 0;
            std::int64_t weighted = 0;
            for (const auto& [w, a] : c.dist.entries) {
                count += a;
                weighted += w * a;
            }
            o.expect(count == fp.q - 1, where + ": sum of A_w");
            o.expect(weighted * fp.p == c.dist.n * fp.q * (fp.p - 1), where + ": sum of w A_w");
            o.expect(static_cast<std::int64_t>(c.dist.entries.size()) <= fp.p + 1, where + ": too many weights");
            o.expect(c.dist.kernel_size == 1 && c.dist.k == fp.e, where + ": not injective");
            const auto w = w_closed(fp, c.alpha, describe(*c.ctx, c.beta));
            o.expect((fp.q - 1 + w) % fp.p == 0, where + ": p does not divide q - 1 + w");
            o.expect((fp.q - 1 + w) / fp.p == c.dist.n, where + ": length");
            const auto pr = predict(fp, c.alpha, describe(*c.ctx, c.beta));
            o.expect(pr.n == c.dist.n, where + ": predicted length");
        } catch (const Error& e) {
            o.fail(where + ": " + e.what());
        }
    }
    if (o.ok)
        o.detail = std::to_string(tested) + " nonempty codes; closed forms divided exactly";
    return o;
}

Outcome dual_suite(const std::vector<Code>& codes, const Fields& F) {
    Outcome o;
    std::int64_t witnesses = 0;
    std::int64_t ycounts = 0;
    for (const auto& c : codes) {
        if (c.label.rfind("sweep", 0) != 0 || c.ctx->params().q == 81)
            continue;
        const auto& ctx = *c.ctx;
        const auto& fp = ctx.params();
        const std::string where = c.label + " alpha = " + std::to_string(c.alpha) + ", beta = " + ctx.format(c.beta);
        if (c.beta.is_zero()) {
            if (c.dist.n == 0)
                continue;
            const auto D = defining_set(ctx, c.alpha, c.beta);
            const auto flag = dual_min_distance_flag(ctx, c.alpha, c.beta, D);
            if (flag.distance != DualDistance::two || !flag.witness) {
                o.fail(where + ": no weight-2 dual word");
                continue;
            }
            // re-check the witness against every codeword
            const auto& w = *flag.witness;
            bool ok = D.elements.at(w.i) == w.d_i && D.elements.at(w.j) == w.d_j && w.i != w.j;
            for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(fp.q) && ok; ++v) {
                const Felem gamma = ctx.from_encoding(v);
                ok = (w.c_i * trace_of_gamma(ctx, w.d_i, gamma) + w.c_j * trace_of_gamma(ctx, w.d_j, gamma)) % fp.p == 0;
            }
            o.expect(ok, where + ": witness is not a dual word");
            ++witnesses;
        } else {
            const auto brute = y_count_brute(ctx, c.alpha, c.beta);
            const auto closed = y_count_closed(fp, c.alpha, describe(ctx, c.beta));
            o.expect(brute == closed, where + ": #Y brute " + std::to_string(brute) + ", closed " + std::to_string(closed));
            ++ycounts;
        }
    }

    const auto& c751 = F.f751;
    const auto D = defining_set(c751, 2, c751.one());
    const auto s37 = summarize_dual(c751, 2, c751.one(), D, 4);
    o.expect(s37.y_count == 0 && s37.distance == DualDistance::at_least_three, "(7,5,1,2,1) dual distance");

    const auto s532 = summarize_dual_closed(F.f532.params(), 0, std::nullopt);
    o.expect(s532.sphere_packing_optimal == true && !s532.paper_claim_mismatch, "(5,3,2) sphere packing");
    const auto D371 = defining_set(F.f371, 0, F.f371.zero());
    const auto s371 = summarize_dual(F.f371, 0, F.f371.zero(), D371, 6);
    o.expect(s371.sphere_packing_optimal == false && s371.paper_claim_mismatch,
             "(3,7,1) sphere packing should be false and flagged");

    if (o.ok)
        o.detail = std::to_string(witnesses) + " witnesses checked on all codewords, " + std::to_string(ycounts) +
                   " #Y agreements; (3,7,1) alpha = beta = 0 not optimal (paper_claim_mismatch)";
    return o;
}

Outcome secret_sharing(const std::vector<Code>& codes) {
    Outcome o;
    const Dist* ex37 = nullptr;
    const Dist* ex38 = nullptr;
    for (const auto& c : codes) {
        if (c.label == "(7,5,1,2,1)")
            ex37 = &c.dist.entries;
        if (c.label == "(7,5,1,1,0)")
            ex38 = &c.dist.entries;
    }
    if (!ex37 || !ex38) {
        o.fail("golden codes missing");
        return o;
    }
    const auto a = secret_sharing_check(*ex38, 7);
    o.expect(a.wt_min == 798 && a.wt_max == 840 && a.ok, "798/840 should pass");
    const auto b = secret_sharing_check(*ex37, 7);
    o.expect(b.wt_min == 294 && b.wt_max == 343 && !b.ok, "294/343 should fail");
    // independent cross-multiplication
    o.expect(7 * 798 > 6 * 840 && 7 * 294 == 6 * 343, "arithmetic");
    if (o.ok)
        o.detail = "798/840 passes, 294/343 = 6/7 fails (strict)";
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

Outcome determinism(const Fields& F, const char* cli) {
    Outcome o;
    if (cli != nullptr) {
        const auto dir = std::filesystem::temp_directory_path() / ("tracecode_accept_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        std::string outs[2];
        const unsigned threads[2] = {1, 4};
        for (int i = 0; i < 2; ++i) {
            const auto out = dir / ("sweep" + std::to_string(i) + ".json");
            const std::string cmd = std::string("\"") + cli + "\" sweep --p 3 --ell 7 --m 1 --no-cache --threads " +
                                    std::to_string(threads[i]) + " --out \"" + out.string() + "\"";
            const int rc = std::system(cmd.c_str());
            o.expect(rc == 0, "sweep exited with " + std::to_string(rc));
            outs[i] = slurp(out);
        }
        std::filesystem::remove_all(dir);
        o.expect(!outs[0].empty() && outs[0] == outs[1], "outputs differ");
        if (o.ok)
            o.detail = "two CLI sweeps (--threads 1, 4) byte-identical, " + std::to_string(outs[0].size()) + " bytes";
        return o;
    }
    const auto& fp = F.f371.params();
    const auto a = render_sweep(fp, sweep_reports(fp, &F.f371, Mode::both, 1), Format::json);
    const auto b = render_sweep(fp, sweep_reports(fp, &F.f371, Mode::both, 4), Format::json);
    o.expect(a == b, "outputs differ");
    if (o.ok)
        o.detail = "in-process sweeps (1 and 4 workers) byte-identical";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    int failures = 0;
    auto report = [&](int n, const char* title, const std::function<Outcome()>& fn) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s %d %s: %s\n", o.ok ? "PASS" : "FAIL", n, title, o.detail.c_str());
        std::fflush(stdout);
        failures += o.ok ? 0 : 1;
    };

    const Fields F;
    std::vector<Code> codes;
    report(1, "golden examples", [&] { return golden(F, codes); });
    report(2, "Weil sums closed vs brute", [&] { return weil(F); });
    report(3, "w closed vs brute", [&] { return wvalues(F); });
    report(4, "large beta = 0 case", [&] { return large_case(F, codes); });
    for (const FieldCtx* ctx : {&F.f351, &F.f371, &F.f751})
        sweep_codes(*ctx, codes);
    report(5, "structural identities", [&] { return structure(codes); });
    report(6, "dual suite", [&] { return dual_suite(codes, F); });
    report(7, "secret sharing ratio", [&] { return secret_sharing(codes); });
    report(8, "sweep determinism", [&] { return determinism(F, cli); });
    return failures == 0 ? 0 : 1;
}
