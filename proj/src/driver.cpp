#include "tracecode/driver.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "report_json.hpp"
#include "tracecode/arith.hpp"
#include "tracecode/field_cache.hpp"
#include "tracecode/weil.hpp"

namespace tracecode {

namespace {

// Up to this q the verify suite runs over every field element.
constexpr std::int64_t kExhaustiveQ = 729;

bool needs_enumeration(const RunConfig& c) {
    switch (c.command) {
    case Command::field_info: return false;
    case Command::verify: return true;
    default: return c.mode != Mode::closed;
    }
}

bool needs_field(const RunConfig& c) {
    return needs_enumeration(c) || c.command == Command::field_info || c.beta.kind == BetaSpec::Kind::coeffs;
}

Felem resolve_beta(const FieldCtx& ctx, const BetaSpec& b) {
    switch (b.kind) {
    case BetaSpec::Kind::zero: return ctx.zero();
    case BetaSpec::Kind::index:
    case BetaSpec::Kind::klass: return ctx.g_power(b.index);
    case BetaSpec::Kind::coeffs: {
        if (b.coeffs.size() > static_cast<std::size_t>(ctx.degree()))
            throw Error(Errc::invalid_parameter, "beta has " + std::to_string(b.coeffs.size()) +
                                                     " coefficients; the field has degree " +
                                                     std::to_string(ctx.degree()));
        Felem x = ctx.zero();
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            x.coeffs[i] = static_cast<std::uint32_t>(mod_floor(b.coeffs[i], ctx.p()));
        return x;
    }
    }
    throw Error(Errc::internal, "resolve_beta: unknown kind");
}

std::optional<std::int64_t> j_of_power(const FieldParams& fp, std::int64_t t) { return mod_floor(-t, fp.N); }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::pair<JClass, std::int64_t>> class_representatives(const FieldParams& fp) {
    std::vector<std::pair<JClass, std::int64_t>> reps;  // class, t with j(g^t) = least member
    for (auto c : kAllJClasses) {
        const auto members = class_members(fp.ell, fp.m, c);
        if (!members.empty())
            reps.emplace_back(c, mod_floor(fp.N - members.front(), fp.N));
    }
    return reps;
}

std::string coeff_string(const CycInt& x) {
    std::string s = "(";
    const auto c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? ", " : "") + std::to_string(c[i]);
    return s + ")";
}

Json cyc_json(const CycInt& x) { return Json(std::vector<std::int64_t>(x.coeffs().begin(), x.coeffs().end())); }

std::string render_plain_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

FieldParams resolve_params(const RunConfig& c) {
    const std::uint64_t limit = c.q_limit.value_or(needs_enumeration(c) ? kEnumerationQLimit : kClosedFormQLimit);
    try {
        return validate_params(c.p, c.ell, c.m, limit);
    } catch (const Error& e) {
        if (e.code() == Errc::q_limit_exceeded && needs_enumeration(c))
            throw Error(e.code(), std::string(e.what()) + "; use --mode closed or raise --q-limit");
        throw;
    }
}

FieldCtx open_field(const FieldParams& fp, const RunConfig& c) {
    std::optional<std::filesystem::path> dir;
    if (!c.no_cache) {
        if (c.cache_dir) {
            dir = c.cache_dir;
        } else if (const char* env = std::getenv("TRACECODE_CACHE_DIR"); env != nullptr && *env != '\0') {
            dir = std::filesystem::path(env);
        }
    }
    return build_field(fp, dir);
}

CodeReport build_code_report(const FieldParams& fp, const FieldCtx* ctx, std::int64_t alpha, const BetaSpec& beta,
                             Mode mode, unsigned threads, bool timing) {
    const auto start = std::chrono::steady_clock::now();
    CodeReport r;
    r.params = fp;
    r.alpha = mod_floor(alpha, fp.p);
    r.beta = beta;

    std::optional<Felem> b;
    if (ctx != nullptr) {
        b = resolve_beta(*ctx, beta);
        r.beta_class = describe(*ctx, *b);
        if (!b->is_zero())
            r.j_beta = ctx->j_index(*b);
    } else if (beta.kind == BetaSpec::Kind::index || beta.kind == BetaSpec::Kind::klass) {
        r.j_beta = j_of_power(fp, beta.index);
        r.beta_class = classify_j(fp.ell, fp.m, *r.j_beta);
    } else if (beta.kind != BetaSpec::Kind::zero) {
        throw Error(Errc::internal, "build_code_report: beta coefficients need a field");
    }

    if (mode == Mode::closed) {
        r.prediction = predict(fp, r.alpha, r.beta_class);
        r.printed = printed_comparison(fp, r.alpha, r.beta_class, *r.prediction);
        if (!r.prediction->empty) {
            r.dual = summarize_dual_closed(fp, r.alpha, r.beta_class);
            if (r.beta_class)
                r.y_count_closed = r.dual->y_count;
            if (r.prediction->enumerators)
                r.secret_sharing = secret_sharing_check(*r.prediction->enumerators, fp.p);
        }
    } else {
        if (ctx == nullptr)
            throw Error(Errc::internal, "build_code_report: enumeration needs a field");
        DefiningSet D;
        if (mode == Mode::both) {
            auto v = verify_code(*ctx, r.alpha, *b, threads);
            D = std::move(v.D);
            r.code = std::move(v.dist);
            r.prediction = std::move(v.prediction);
            r.printed = std::move(v.printed);
            if (!D.empty()) {
                const auto& c = v.checks;
                r.checks = {{"length_match", c.length_match}, {"weights_subset", c.weights_subset}};
                if (c.enumerators_match)
                    r.checks.emplace_back("enumerators_match", *c.enumerators_match);
                r.checks.insert(r.checks.end(), {{"injective", c.injective},
                                                 {"sum_identities", c.sum_identities},
                                                 {"weight_count_bound", c.weight_count_bound},
                                                 {"length_integrality", c.length_integrality}});
            } else if (!r.prediction->empty) {
                r.checks = {{"length_match", false}};
            }
        } else {
            D = defining_set(*ctx, r.alpha, *b);
            r.code = weight_distribution_brute(*ctx, D, threads);
            if (!D.empty()) {
                const auto& dist = *r.code;
                const bool injective = dist.kernel_size == 1 && generator_rank(*ctx, D) == fp.e;
                const bool sums = dist.total() == fp.q - 1 &&
                                  checked_mul(dist.weighted_total(), fp.p) ==
                                      checked_mul(checked_mul(dist.n, fp.q), fp.p - 1);
                r.checks = {{"injective", injective},
                            {"sum_identities", sums},
                            {"weight_count_bound", static_cast<std::int64_t>(dist.entries.size()) <= fp.p + 1}};
            }
        }
        if (!D.empty()) {
            r.dual = summarize_dual(*ctx, r.alpha, *b, D, r.code->k);
            if (mode == Mode::both) {
                if (r.beta_class) {
                    r.y_count_closed = y_count_closed(fp, r.alpha, r.beta_class);
                    r.checks.emplace_back("y_count_match", *r.y_count_closed == r.dual->y_count);
                } else {
                    r.checks.emplace_back("dual_distance_two", r.dual->distance == DualDistance::two);
                }
            }
            r.secret_sharing = secret_sharing_check(r.code->entries, fp.p);
        }
    }
    if (timing)
        r.timing_ms = elapsed_ms(start);
    return r;
}

std::vector<CodeReport> sweep_reports(const FieldParams& fp, const FieldCtx* ctx, Mode mode, unsigned threads,
                                      bool timing) {
    std::vector<CodeReport> rows;
    for (std::int64_t alpha = 0; alpha < fp.p; ++alpha) {
        rows.push_back(build_code_report(fp, ctx, alpha, BetaSpec{}, mode, threads, timing));
        for (auto c : kAllJClasses) {
            const auto members = class_members(fp.ell, fp.m, c);
            BetaSpec b;
            b.kind = BetaSpec::Kind::klass;
            b.klass = c;
            if (members.empty()) {
                CodeReport r;
                r.params = fp;
                r.alpha = alpha;
                r.beta = b;
                r.beta_class = c;
                r.class_empty = true;
                rows.push_back(std::move(r));
                continue;
            }
            b.index = mod_floor(fp.N - members.front(), fp.N);
            rows.push_back(build_code_report(fp, ctx, alpha, b, mode, threads, timing));
        }
    }
    return rows;
}

namespace {

std::int64_t row_n(const CodeReport& r) {
    if (r.code)
        return r.code->n;
    return r.prediction ? r.prediction->n : 0;
}

std::int64_t row_weight_count(const CodeReport& r) {
    if (r.code)
        return static_cast<std::int64_t>(r.code->entries.size());
    if (r.prediction)
        return static_cast<std::int64_t>(r.prediction->enumerators ? r.prediction->enumerators->size()
                                                                   : r.prediction->weights.size());
    return 0;
}

std::string row_class(const CodeReport& r) {
    if (r.beta.kind == BetaSpec::Kind::zero)
        return "BETA_ZERO";
    return r.beta.klass ? std::string(to_string(*r.beta.klass)) : describe_string(r.beta_class);
}

} // namespace

std::string render_sweep(const FieldParams& fp, const std::vector<CodeReport>& rows, Format format) {
    if (format == Format::json) {
        Json j;
        j["params"] = params_json(fp);
        Json reports = Json::array();
        for (const auto& r : rows)
            reports.push_back(report_to_json(r));
        j["reports"] = std::move(reports);
        Json summary = Json::array();
        for (const auto& r : rows) {
            Json s;
            s["alpha"] = r.alpha;
            s["class"] = row_class(r);
            s["n"] = row_n(r);
            s["weights"] = row_weight_count(r);
            s["branch_id"] = r.prediction ? Json(r.prediction->branch_id) : Json(nullptr);
            s["class_empty"] = r.class_empty;
            s["all_pass"] = r.all_pass();
            summary.push_back(std::move(s));
        }
        j["summary"] = std::move(summary);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == Format::csv) {
        os << "alpha,class,n,weights,branch_id,all_pass\n";
        for (const auto& r : rows)
            os << r.alpha << ',' << row_class(r) << ',' << row_n(r) << ',' << row_weight_count(r) << ','
               << (r.prediction ? r.prediction->branch_id : "") << ',' << (r.all_pass() ? "true" : "false") << '\n';
        return os.str();
    }
    os << "alpha  class        n         weights  branch        checks\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(7) << r.alpha << std::setw(13) << row_class(r) << std::setw(10) << row_n(r)
           << std::setw(9) << row_weight_count(r) << std::setw(14)
           << (r.class_empty ? "(no members)" : r.prediction ? r.prediction->branch_id : "-")
           << (r.all_pass() ? "pass" : "FAIL") << "\n";
    }
    return os.str();
}

std::vector<PropertyResult> verify_properties(const FieldCtx& ctx, unsigned threads) {
    const auto& fp = ctx.params();
    const int p = ctx.p();
    const bool exhaustive = fp.q <= kExhaustiveQ;
    const auto reps = class_representatives(fp);

    // Sample sets: all of F_q when small, else class representatives and their F_p^* multiples.
    std::vector<Felem> nonzero;
    if (exhaustive) {
        for (std::int64_t v = 1; v < fp.q; ++v)
            nonzero.push_back(ctx.from_encoding(static_cast<std::uint64_t>(v)));
    } else {
        for (const auto& [c, t] : reps) {
            for (std::int64_t z = 1; z < p; ++z)
                nonzero.push_back(ctx.scale(ctx.g_power(t), z));
        }
    }
    std::vector<Felem> rep_elems;
    for (const auto& [c, t] : reps)
        rep_elems.push_back(ctx.g_power(t));
    // Elements outside the prime field for the general-a identities.
    std::vector<Felem> general_a{ctx.zero()};
    for (std::int64_t t = 1; t <= 16 && t < fp.q - 1; ++t)
        general_a.push_back(ctx.g_power(t * 7 + 1));

    std::vector<PropertyResult> out;
    auto property = [&](std::string name, const std::function<void(const std::function<void(bool, const std::string&)>&)>& body) {
        PropertyResult pr;
        pr.name = std::move(name);
        auto record = [&](bool ok, const std::string& what) {
            ++pr.total;
            if (ok)
                ++pr.passed;
            else if (!pr.counterexample)
                pr.counterexample = what;
        };
        try {
            body(record);
        } catch (const std::exception& e) {
            ++pr.total;
            if (!pr.counterexample)
                pr.counterexample = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(pr));
    };

    property("trace_table", [&](const auto& record) {
        for (std::int64_t j = 0; j < fp.N; ++j) {
            const auto table = mod_floor(trace_of_xi_power(fp.ell, fp.m, j), fp.p);
            std::int64_t field = -1;
            std::string err;
            try {
                field = ctx.trace(ctx.xi_power(j));
            } catch (const std::exception& e) {
                err = e.what();
            }
            record(field == table, "j = " + std::to_string(j) + ": table gives " + std::to_string(table) +
                                       ", field trace " + (err.empty() ? std::to_string(field) : err));
        }
    });

    property("single_sum_closed", [&](const auto& record) {
        for (std::int64_t a = 0; a < p; ++a) {
            const auto brute = s_single_brute(ctx, ctx.from_int(a));
            const auto closed = s_single_closed(fp, a);
            record(brute == closed, "a = " + std::to_string(a) + ": brute " + coeff_string(brute) + ", closed " +
                                        coeff_string(closed));
        }
    });

    property("single_sum_xi_invariance", [&](const auto& record) {
        for (const auto& a : general_a) {
            const auto base = s_single_brute(ctx, a);
            Felem u = a;
            for (std::int64_t j = 1; j < fp.N; ++j) {
                u = ctx.mul(u, ctx.xi());
                const auto v = s_single_brute(ctx, u);
                record(v == base, "a = " + ctx.format(a) + ", j = " + std::to_string(j) + ": " + coeff_string(v) +
                                      " vs " + coeff_string(base));
            }
        }
    });

    property("binomial_b_zero", [&](const auto& record) {
        std::vector<Felem> as = general_a;
        if (exhaustive) {
            as = {ctx.zero()};
            as.insert(as.end(), nonzero.begin(), nonzero.end());
        }
        for (const auto& a : as) {
            const auto brute = s_binomial_brute(ctx, a, ctx.zero());
            const auto expected = s_single_brute(ctx, a).scaled(fp.exp_d);
            record(brute == expected, "a = " + ctx.format(a) + ": S(a,0) = " + coeff_string(brute) +
                                          ", (q-1)/N S(a) = " + coeff_string(expected));
        }
    });

    property("binomial_closed_vs_brute", [&](const auto& record) {
        std::vector<Felem> bs{ctx.zero()};
        bs.insert(bs.end(), nonzero.begin(), nonzero.end());
        for (std::int64_t a = 1; a < p; ++a) {
            for (const auto& b : bs) {
                const auto brute = s_binomial_brute(ctx, ctx.from_int(a), b);
                const auto closed = s_binomial_closed(ctx, a, b);
                record(brute == closed, "a = " + std::to_string(a) + ", b = " + ctx.format(b) + ": brute " +
                                            coeff_string(brute) + ", closed " + coeff_string(closed));
            }
        }
    });

    property("binomial_scalar_invariance", [&](const auto& record) {
        for (std::int64_t a = 1; a < p; ++a) {
            for (const auto& b : rep_elems) {
                const auto base = s_binomial_brute(ctx, ctx.from_int(a), b);
                for (std::int64_t z = 2; z < p; ++z) {
                    const auto v = s_binomial_brute(ctx, ctx.from_int(a), ctx.scale(b, z));
                    record(v == base, "a = " + std::to_string(a) + ", b = " + ctx.format(b) + ", lambda = " +
                                          std::to_string(z) + ": " + coeff_string(v) + " vs " + coeff_string(base));
                }
            }
        }
    });

    property("binomial_reduced_vs_brute", [&](const auto& record) {
        for (const auto& a : general_a) {
            for (const auto& b : rep_elems) {
                const auto brute = s_binomial_brute(ctx, a, b);
                const auto reduced = s_binomial_reduced(ctx, a, b);
                record(brute == reduced, "a = " + ctx.format(a) + ", b = " + ctx.format(b) + ": brute " +
                                             coeff_string(brute) + ", reduced " + coeff_string(reduced));
            }
        }
    });

    property("w_closed_vs_brute", [&](const auto& record) {
        std::vector<Felem> xs{ctx.zero()};
        xs.insert(xs.end(), nonzero.begin(), nonzero.end());
        for (std::int64_t alpha = 0; alpha < p; ++alpha) {
            const WTable table(fp, alpha);
            for (const auto& x : xs) {
                const auto brute = w_brute(ctx, alpha, x);
                const auto closed = table.at(describe(ctx, x));
                record(brute == closed, "alpha = " + std::to_string(alpha) + ", x = " + ctx.format(x) + " (" +
                                            describe_string(describe(ctx, x)) + "): brute " + std::to_string(brute) +
                                            ", closed " + std::to_string(closed));
            }
        }
    });

    std::vector<std::pair<std::string, Felem>> betas{{"0", ctx.zero()}};
    for (std::size_t i = 0; i < reps.size(); ++i)
        betas.emplace_back("g^" + std::to_string(reps[i].second), rep_elems[i]);

    property("code_distributions", [&](const auto& record) {
        for (std::int64_t alpha = 0; alpha < p; ++alpha) {
            for (const auto& [name, b] : betas) {
                const auto v = verify_code(ctx, alpha, b, threads);
                const bool ok = v.D.empty() ? v.prediction.empty : v.checks.all_pass();
                std::string dist;
                for (const auto& [w, c] : v.dist.entries)
                    dist += " " + std::to_string(w) + ":" + std::to_string(c);
                record(ok, "alpha = " + std::to_string(alpha) + ", beta = " + name + ": n = " +
                               std::to_string(v.dist.n) + " (predicted " + std::to_string(v.prediction.n) +
                               "), distribution {" + dist + " }");
            }
        }
    });

    property("y_count_closed_vs_brute", [&](const auto& record) {
        for (std::int64_t alpha = 0; alpha < p; ++alpha) {
            for (std::size_t i = 1; i < betas.size(); ++i) {
                const auto& b = betas[i].second;
                const auto brute = y_count_brute(ctx, alpha, b);
                const auto closed = y_count_closed(fp, alpha, describe(ctx, b));
                record(brute == closed && brute % (p - 1) == 0,
                       "alpha = " + std::to_string(alpha) + ", beta = " + betas[i].first + ": brute " +
                           std::to_string(brute) + ", closed " + std::to_string(closed));
            }
        }
    });

    property("dual_distance_two", [&](const auto& record) {
        for (std::int64_t alpha = 0; alpha < p; ++alpha) {
            const auto D = defining_set(ctx, alpha, ctx.zero());
            if (D.empty())
                continue;
            const auto flag = dual_min_distance_flag(ctx, alpha, ctx.zero(), D);
            record(flag.distance == DualDistance::two && flag.witness.has_value(),
                   "alpha = " + std::to_string(alpha) + ", beta = 0: no weight-2 dual word found");
        }
    });

    return out;
}

int run_field_info(const RunConfig& c, std::ostream&) {
    const auto fp = resolve_params(c);
    const auto ctx = open_field(fp, c);
    const auto full = cyclotomic_modulus(fp);
    bool traces_ok = true;
    Json classes = Json::array();
    for (auto cl : kAllJClasses) {
        const auto members = class_members(fp.ell, fp.m, cl);
        Json o;
        o["class"] = to_string(cl);
        o["size"] = members.size();
        o["members"] = members;
        o["trace"] = members.empty() ? Json(nullptr) : Json(trace_of_xi_power(fp.ell, fp.m, members.front()));
        for (auto j : members) {
            traces_ok = traces_ok && static_cast<std::int64_t>(ctx.trace(ctx.xi_power(j))) ==
                                         mod_floor(trace_of_xi_power(fp.ell, fp.m, j), fp.p);
        }
        classes.push_back(std::move(o));
    }
    if (c.format == Format::json) {
        Json j;
        j["params"] = params_json(fp);
        j["sqrt_q"] = fp.sqrt_q;
        j["modulus"] = full;
        j["g"] = ctx.g().coeffs;
        j["xi"] = ctx.xi().coeffs;
        j["log_table"] = ctx.has_log_table();
        j["classes"] = std::move(classes);
        j["trace_table_ok"] = traces_ok;
        write_output(render_plain_json(j), c.out);
    } else {
        std::ostringstream os;
        os << "GF(" << fp.p << "^" << fp.e << "), q = " << fp.q << ", N = " << fp.N << "\n";
        os << "modulus  ";
        for (std::size_t i = 0; i < full.size(); ++i)
            os << (i ? " " : "") << full[i];
        os << "  (constant term first)\n";
        os << "g        " << ctx.format(ctx.g()) << "\nxi       " << ctx.format(ctx.xi()) << "\n";
        for (const auto& o : classes)
            os << std::left << std::setw(10) << o["class"].get<std::string>() << " size " << std::setw(6)
               << o["size"].get<std::size_t>() << " Tr " << o["trace"].dump() << "\n";
        os << "trace table " << (traces_ok ? "matches" : "DOES NOT match") << " the field\n";
        write_output(os.str(), c.out);
    }
    return traces_ok ? kExitOk : kExitMismatch;
}

int run_weil(const RunConfig& c, std::ostream&) {
    const auto fp = resolve_params(c);
    const auto a = mod_floor(c.a, fp.p);
    if (a == 0 && c.mode != Mode::brute)
        throw Error(Errc::invalid_parameter, "the closed form needs a in [1, p)");
    std::optional<FieldCtx> ctx;
    if (needs_field(c))
        ctx.emplace(open_field(fp, c));
    Json j;
    j["params"] = params_json(fp);
    j["a"] = a;
    std::optional<std::int64_t> jb;
    if (ctx) {
        const auto b = resolve_beta(*ctx, c.beta);
        if (!b.is_zero())
            jb = ctx->j_index(b);
        j["b"] = b.coeffs;
    } else if (c.beta.kind == BetaSpec::Kind::index) {
        jb = j_of_power(fp, c.beta.index);
        j["b"] = "g^" + std::to_string(c.beta.index);
    } else {
        j["b"] = Json::array();
    }
    j["j_b"] = jb ? Json(*jb) : Json(nullptr);
    j["class"] = jb ? std::string(to_string(classify_j(fp.ell, fp.m, *jb))) : std::string("ZERO_ELEMENT");

    std::optional<CycInt> brute, closed, single_brute;
    if (c.mode != Mode::closed) {
        brute = s_binomial_brute(*ctx, ctx->from_int(a), resolve_beta(*ctx, c.beta));
        single_brute = s_single_brute(*ctx, ctx->from_int(a));
    }
    if (c.mode != Mode::brute)
        closed = s_binomial_closed(fp, a, jb);
    const auto single_closed = s_single_closed(fp, a);
    j["brute"] = brute ? cyc_json(*brute) : Json(nullptr);
    j["closed"] = closed ? cyc_json(*closed) : Json(nullptr);
    const bool match = !brute || !closed || *brute == *closed;
    j["match"] = brute && closed ? Json(match) : Json(nullptr);
    j["single"] = {{"brute", single_brute ? cyc_json(*single_brute) : Json(nullptr)},
                   {"closed", cyc_json(single_closed)},
                   {"match", single_brute ? Json(*single_brute == single_closed) : Json(nullptr)}};
    const bool single_match = !single_brute || *single_brute == single_closed;
    if (c.format == Format::json) {
        write_output(render_plain_json(j), c.out);
    } else {
        std::ostringstream os;
        os << "S(" << a << ", b) with j_b = " << j["j_b"].dump() << " (" << j["class"].get<std::string>() << ")\n";
        if (brute)
            os << "  brute   " << coeff_string(*brute) << "\n";
        if (closed)
            os << "  closed  " << coeff_string(*closed) << "\n";
        if (brute && closed)
            os << "  match   " << (match ? "yes" : "NO") << "\n";
        os << "S(" << a << ") closed " << coeff_string(single_closed);
        if (single_brute)
            os << ", brute " << coeff_string(*single_brute) << (single_match ? "" : "  MISMATCH");
        os << "\n";
        write_output(os.str(), c.out);
    }
    return match && single_match ? kExitOk : kExitMismatch;
}

int run_wmap(const RunConfig& c, std::ostream&) {
    const auto fp = resolve_params(c);
    std::optional<FieldCtx> ctx;
    if (c.mode != Mode::closed)
        ctx.emplace(open_field(fp, c));
    const auto alpha = mod_floor(c.alpha, fp.p);
    const WTable table(fp, alpha);
    Json rows = Json::array();
    bool all_match = true;
    for (std::size_t s = 0; s < WTable::kSize; ++s) {
        const auto d = WTable::descriptor(s);
        Json o;
        o["x"] = describe_string(d);
        o["closed"] = table.at(d);
        const auto printed = w_closed(fp, alpha, d, Reading::printed);
        if (printed != table.at(d))
            o["closed_as_printed"] = printed;
        std::optional<std::int64_t> t;
        if (d) {
            const auto members = class_members(fp.ell, fp.m, *d);
            if (!members.empty())
                t = mod_floor(fp.N - members.front(), fp.N);
            o["representative"] = t ? Json("g^" + std::to_string(*t)) : Json(nullptr);
        } else {
            o["representative"] = "0";
        }
        if (ctx && (t || !d)) {
            const auto x = d ? ctx->g_power(*t) : ctx->zero();
            const auto brute = w_brute(*ctx, alpha, x);
            o["brute"] = brute;
            o["match"] = brute == table.at(d);
            all_match = all_match && brute == table.at(d);
        } else {
            o["brute"] = nullptr;
            o["match"] = nullptr;
        }
        rows.push_back(std::move(o));
    }
    if (c.format == Format::json) {
        Json j;
        j["params"] = params_json(fp);
        j["alpha"] = alpha;
        j["a_config"] = to_string(a_values(fp, alpha).config);
        j["values"] = std::move(rows);
        j["all_match"] = all_match;
        write_output(render_plain_json(j), c.out);
    } else {
        std::ostringstream os;
        os << "w(" << alpha << ", x), configuration " << to_string(a_values(fp, alpha).config) << "\n";
        os << "x             closed        brute         match\n";
        for (const auto& o : rows) {
            os << std::left << std::setw(14) << o["x"].get<std::string>() << std::setw(14) << o["closed"].dump()
               << std::setw(14) << o["brute"].dump() << o["match"].dump();
            if (o.contains("closed_as_printed"))
                os << "  (as printed: " << o["closed_as_printed"].dump() << ")";
            os << "\n";
        }
        write_output(os.str(), c.out);
    }
    return all_match ? kExitOk : kExitMismatch;
}

int run_code(const RunConfig& c, std::ostream&) {
    const auto fp = resolve_params(c);
    std::optional<FieldCtx> ctx;
    if (needs_field(c))
        ctx.emplace(open_field(fp, c));
    const auto report = build_code_report(fp, ctx ? &*ctx : nullptr, c.alpha, c.beta, c.mode, c.threads, c.timing);
    emit_report(report, c.format, c.out);
    return report.all_pass() ? kExitOk : kExitMismatch;
}

int run_dual(const RunConfig& c, std::ostream&) {
    const auto fp = resolve_params(c);
    std::optional<FieldCtx> ctx;
    if (needs_field(c))
        ctx.emplace(open_field(fp, c));
    const auto r = build_code_report(fp, ctx ? &*ctx : nullptr, c.alpha, c.beta, c.mode, c.threads, c.timing);
    const auto full = report_to_json(r);
    Json j;
    j["params"] = full["params"];
    j["alpha"] = full["alpha"];
    j["beta"] = full["beta"];
    j["n"] = r.code ? r.code->n : r.prediction ? r.prediction->n : 0;
    j["dual"] = full["dual"];
    const auto [num, den] = y_count_formula(fp, r.alpha, r.beta_class);
    j["y_count_formula"] = {{"numerator", num}, {"denominator", den}, {"valid", r.beta_class.has_value()}};
    j["secret_sharing"] = full["secret_sharing"];
    bool ok = true;
    for (const auto& [name, pass] : r.checks) {
        if (name == "y_count_match" || name == "dual_distance_two")
            ok = ok && pass;
    }
    if (c.format == Format::json) {
        write_output(render_plain_json(j), c.out);
    } else {
        std::ostringstream os;
        os << "n = " << j["n"].dump() << "\n";
        if (r.dual) {
            os << "dual k = " << r.dual->k_dual << ", d " << (r.dual->distance == DualDistance::two ? "= 2" : ">= 3")
               << ", #Y = " << r.dual->y_count << "\n";
            if (r.dual->witness)
                os << "witness: positions " << r.dual->witness->i << ", " << r.dual->witness->j
                   << " with coefficients 1, 1\n";
            if (r.dual->sphere_packing_optimal)
                os << "sphere-packing optimal: " << (*r.dual->sphere_packing_optimal ? "yes" : "no")
                   << (r.dual->paper_claim_mismatch ? " (contradicts the published optimality claim)" : "") << "\n";
        } else {
            os << "empty code\n";
        }
        os << "(w(alpha,0) + (p-1) w(alpha,beta) + q - p) / p^2 = " << num << "/" << den
           << (r.beta_class ? "" : "  (formula not valid for beta = 0)") << "\n";
        if (r.secret_sharing)
            os << "ratio " << r.secret_sharing->wt_min << "/" << r.secret_sharing->wt_max << ": "
               << (r.secret_sharing->ok ? "ok" : "fails") << "\n";
        write_output(os.str(), c.out);
    }
    return ok ? kExitOk : kExitMismatch;
}

int run_sweep(const RunConfig& c, std::ostream&) {
    const auto fp = resolve_params(c);
    std::optional<FieldCtx> ctx;
    if (needs_field(c))
        ctx.emplace(open_field(fp, c));
    const auto rows = sweep_reports(fp, ctx ? &*ctx : nullptr, c.mode, c.threads, c.timing);
    write_output(render_sweep(fp, rows, c.format), c.out);
    for (const auto& r : rows) {
        if (!r.all_pass())
            return kExitMismatch;
    }
    return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream&) {
    const auto fp = resolve_params(c);
    auto ctx = open_field(fp, c);
    if (c.corrupt_modulus)
        ctx = ctx.corrupted_for_testing();
    const auto results = verify_properties(ctx, c.threads);
    const PropertyResult* first_failure = nullptr;
    for (const auto& r : results) {
        if (r.passed != r.total && first_failure == nullptr)
            first_failure = &r;
    }
    if (c.format == Format::json) {
        Json j;
        j["params"] = params_json(fp);
        Json props = Json::array();
        for (const auto& r : results)
            props.push_back({{"name", r.name}, {"passed", r.passed}, {"total", r.total}, {"ok", r.passed == r.total}});
        j["properties"] = std::move(props);
        j["all_pass"] = first_failure == nullptr;
        j["counterexample"] = first_failure ? Json(first_failure->name + ": " + *first_failure->counterexample)
                                            : Json(nullptr);
        write_output(render_plain_json(j), c.out);
    } else {
        std::ostringstream os;
        for (const auto& r : results)
            os << std::left << std::setw(28) << r.name << std::right << std::setw(8) << r.passed << "/" << std::left
               << std::setw(8) << r.total << (r.passed == r.total ? "pass" : "FAIL") << "\n";
        if (first_failure)
            os << "first counterexample (" << first_failure->name << "): " << *first_failure->counterexample << "\n";
        write_output(os.str(), c.out);
    }
    return first_failure ? kExitMismatch : kExitOk;
}

int run(const RunConfig& c, std::ostream& err) {
    try {
        switch (c.command) {
        case Command::field_info: return run_field_info(c, err);
        case Command::weil: return run_weil(c, err);
        case Command::wmap: return run_wmap(c, err);
        case Command::code: return run_code(c, err);
        case Command::dual: return run_dual(c, err);
        case Command::sweep: return run_sweep(c, err);
        case Command::verify: return run_verify(c, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case Errc::inexact_division:
        case Errc::internal:
        case Errc::overflow: return kExitMismatch;
        default: return kExitUsage;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace tracecode
