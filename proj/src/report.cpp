#include "tracecode/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "report_json.hpp"
#include "tracecode/error.hpp"

namespace tracecode {

bool CodeReport::all_pass() const {
    for (const auto& [name, ok] : checks) {
        if (!ok)
            return false;
    }
    return true;
}

Json params_json(const FieldParams& fp) {
    Json j;
    j["p"] = fp.p;
    j["ell"] = fp.ell;
    j["m"] = fp.m;
    j["N"] = fp.N;
    j["e"] = fp.e;
    j["q"] = fp.q;
    return j;
}

namespace {

std::string_view kind_name(BetaSpec::Kind k) {
    switch (k) {
    case BetaSpec::Kind::zero: return "zero";
    case BetaSpec::Kind::index: return "index";
    case BetaSpec::Kind::coeffs: return "coeffs";
    case BetaSpec::Kind::klass: return "class";
    }
    return "?";
}

Json pairs(const std::map<std::int64_t, std::int64_t>& m) {
    Json a = Json::array();
    for (const auto& [w, c] : m)
        a.push_back(Json::array({w, c}));
    return a;
}

Json beta_json(const CodeReport& r) {
    Json b;
    b["kind"] = kind_name(r.beta.kind);
    switch (r.beta.kind) {
    case BetaSpec::Kind::zero: b["value"] = nullptr; break;
    case BetaSpec::Kind::index: b["value"] = r.beta.index; break;
    case BetaSpec::Kind::klass: b["value"] = r.class_empty ? Json(nullptr) : Json(r.beta.index); break;
    case BetaSpec::Kind::coeffs: b["value"] = r.beta.coeffs; break;
    }
    b["j_beta"] = r.j_beta ? Json(*r.j_beta) : Json(nullptr);
    b["class"] = r.class_empty && r.beta.klass ? std::string(to_string(*r.beta.klass)) : describe_string(r.beta_class);
    return b;
}

std::map<std::int64_t, std::int64_t> shown_distribution(const CodeReport& r) {
    if (r.code)
        return r.code->entries;
    if (r.prediction && r.prediction->enumerators)
        return *r.prediction->enumerators;
    throw Error(Errc::invalid_parameter, "no distribution is available; the closed form fixes only the weights here");
}

} // namespace

Json report_to_json(const CodeReport& r) {
    Json j;
    j["params"] = params_json(r.params);
    j["alpha"] = r.alpha;
    j["beta"] = beta_json(r);
    if (r.class_empty)
        j["class_empty"] = true;

    if (r.code) {
        Json c;
        c["n"] = r.code->n;
        c["k"] = r.code->k;
        c["distribution"] = pairs(r.code->entries);
        j["code"] = std::move(c);
    } else {
        j["code"] = nullptr;
    }

    if (r.prediction) {
        const auto& pr = *r.prediction;
        Json p;
        p["branch_id"] = pr.branch_id;
        p["n"] = pr.n;
        p["k"] = pr.k;
        p["weights"] = pr.weights;
        if (pr.enumerators)
            p["enumerators"] = pairs(*pr.enumerators);
        if (r.printed) {
            p["printed_agrees"] = r.printed->agrees;
            p["printed_notes"] = r.printed->notes;
        }
        j["prediction"] = std::move(p);
    } else {
        j["prediction"] = nullptr;
    }

    Json checks = Json::object();
    for (const auto& [name, ok] : r.checks)
        checks[name] = ok;
    j["checks"] = std::move(checks);

    if (r.dual) {
        const auto& d = *r.dual;
        Json o;
        o["k"] = d.k_dual;
        o["d"] = to_string(d.distance);
        o["y_count"] = d.y_count;
        if (r.y_count_closed)
            o["y_count_closed"] = *r.y_count_closed;
        o["sphere_packing_optimal"] = d.sphere_packing_optimal ? Json(*d.sphere_packing_optimal) : Json(nullptr);
        o["paper_claim_mismatch"] = d.paper_claim_mismatch;
        if (d.witness) {
            Json w;
            w["i"] = d.witness->i;
            w["j"] = d.witness->j;
            w["c_i"] = d.witness->c_i;
            w["c_j"] = d.witness->c_j;
            w["d_i"] = d.witness->d_i.coeffs;
            w["d_j"] = d.witness->d_j.coeffs;
            o["witness"] = std::move(w);
        }
        j["dual"] = std::move(o);
    } else {
        j["dual"] = nullptr;
    }

    if (r.secret_sharing) {
        Json s;
        s["ratio"] = Json::array({r.secret_sharing->wt_min, r.secret_sharing->wt_max});
        s["ok"] = r.secret_sharing->ok;
        j["secret_sharing"] = std::move(s);
    } else {
        j["secret_sharing"] = nullptr;
    }

    if (r.timing_ms)
        j["timing"] = Json{{"ms", *r.timing_ms}};
    return j;
}

std::string render_json(const CodeReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::string render_csv(const CodeReport& r) {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, c] : shown_distribution(r))
        os << w << ',' << c << '\n';
    return os.str();
}

std::string render_text(const CodeReport& r) {
    std::ostringstream os;
    const auto& fp = r.params;
    os << "field      GF(" << fp.p << "^" << fp.e << "), N = " << fp.N << ", q = " << fp.q << "\n";
    os << "alpha      " << r.alpha << "\n";
    os << "beta       " << kind_name(r.beta.kind);
    if (r.beta.kind == BetaSpec::Kind::index || r.beta.kind == BetaSpec::Kind::klass)
        os << " g^" << r.beta.index;
    os << ", class " << describe_string(r.beta_class);
    if (r.j_beta)
        os << ", j = " << *r.j_beta;
    os << "\n";
    if (r.class_empty) {
        os << "class " << (r.beta.klass ? to_string(*r.beta.klass) : "?") << " has no members\n";
        return os.str();
    }
    if (r.prediction) {
        const auto& pr = *r.prediction;
        os << "branch     " << pr.branch_id << "\n";
        os << "predicted  n = " << pr.n << ", k = " << pr.k << ", weights {";
        for (std::size_t i = 0; i < pr.weights.size(); ++i)
            os << (i ? ", " : "") << pr.weights[i];
        os << "}\n";
        if (r.printed) {
            for (const auto& note : r.printed->notes)
                os << "  note: " << note << "\n";
        }
    }
    if (r.code) {
        os << "code       n = " << r.code->n << ", k = " << r.code->k << "\n";
        os << "  weight      count\n";
        for (const auto& [w, c] : r.code->entries) {
            std::string ws = std::to_string(w);
            os << "  " << ws << std::string(ws.size() < 12 ? 12 - ws.size() : 1, ' ') << c << "\n";
        }
    }
    for (const auto& [name, ok] : r.checks)
        os << "check      " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    if (r.dual) {
        os << "dual       k = " << r.dual->k_dual << ", d " << (r.dual->distance == DualDistance::two ? "= 2" : ">= 3")
           << ", #Y = " << r.dual->y_count;
        if (r.dual->sphere_packing_optimal)
            os << ", sphere-packing optimal: " << (*r.dual->sphere_packing_optimal ? "yes" : "no");
        if (r.dual->paper_claim_mismatch)
            os << " (contradicts the published optimality claim)";
        os << "\n";
    }
    if (r.secret_sharing)
        os << "ratio      " << r.secret_sharing->wt_min << "/" << r.secret_sharing->wt_max << " "
           << (r.secret_sharing->ok ? "exceeds" : "does not exceed") << " (p-1)/p\n";
    if (r.timing_ms)
        os << "time       " << *r.timing_ms << " ms\n";
    return os.str();
}

std::string render(const CodeReport& r, Format f) {
    switch (f) {
    case Format::json: return render_json(r);
    case Format::csv: return render_csv(r);
    case Format::text: return render_text(r);
    }
    return {};
}

void write_output(const std::string& text, const std::optional<std::filesystem::path>& out) {
    if (!out) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream os(*out, std::ios::binary | std::ios::trunc);
    if (!os)
        throw Error(Errc::io, "cannot open " + out->string() + " for writing");
    os << text;
    if (!os)
        throw Error(Errc::io, "write to " + out->string() + " failed");
}

void emit_report(const CodeReport& r, Format f, const std::optional<std::filesystem::path>& out) {
    write_output(render(r, f), out);
}

} // namespace tracecode
