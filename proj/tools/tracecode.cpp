// tracecode: fields, Weil sums, w-values and trace codes from the command line.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "tracecode/driver.hpp"

using namespace tracecode;

namespace {

struct Flags {
    std::optional<std::int64_t> beta_index;
    std::vector<std::int64_t> beta_coeffs;
    bool beta_zero = false;
    std::string cache_dir;
    std::string out;
    std::uint64_t q_limit = 0;
};

void add_common(CLI::App* cmd, RunConfig& cfg, Flags& f, bool with_beta, bool with_alpha) {
    cmd->add_option("--p", cfg.p, "characteristic p")->required();
    cmd->add_option("--ell", cfg.ell, "odd prime ell")->required();
    cmd->add_option("--m", cfg.m, "exponent m, N = 2 ell^m")->capture_default_str();
    if (with_alpha)
        cmd->add_option("--alpha", cfg.alpha, "alpha in F_p")->capture_default_str();
    if (with_beta) {
        auto* z = cmd->add_flag("--beta-zero", f.beta_zero, "beta = 0 (default)");
        auto* i = cmd->add_option("--beta-index", f.beta_index, "beta = g^t");
        auto* c = cmd->add_option("--beta-coeffs", f.beta_coeffs, "beta by polynomial-basis coefficients")
                      ->delimiter(',');
        z->excludes(i)->excludes(c);
        i->excludes(c);
    }
    cmd->add_option("--mode", cfg.mode, "closed, brute or both")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Mode>{{"closed", Mode::closed}, {"brute", Mode::brute}, {"both", Mode::both}}))
        ->option_text("closed|brute|both [both]");
    cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--format", cfg.format, "json, csv or text")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}}))
        ->option_text("json|csv|text [json]");
    cmd->add_option("--out", f.out, "write the output to this file");
    cmd->add_option("--q-limit", f.q_limit, "largest admissible q");
    cmd->add_option("--cache-dir", f.cache_dir, "field cache directory (else $TRACECODE_CACHE_DIR)");
    cmd->add_flag("--no-cache", cfg.no_cache, "ignore the field cache");
    cmd->add_flag("--timing", cfg.timing, "include wall-clock timings");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trace codes from two-term defining sets over GF(p^phi(2 ell^m))"};
    app.require_subcommand(1);
    RunConfig cfg;
    Flags f;

    struct Sub {
        const char* name;
        Command command;
        const char* help;
        bool beta;
        bool alpha;
    };
    const Sub subs[] = {
        {"field-info", Command::field_info, "modulus, primitive element and trace table", false, false},
        {"weil", Command::weil, "S(a, beta): closed form and direct sum", true, false},
        {"wmap", Command::wmap, "w(alpha, x) per class: closed form and direct sum", false, true},
        {"code", Command::code, "weight distribution of C_{alpha,beta} with checks", true, true},
        {"dual", Command::dual, "dual distance, #Y and bounds", true, true},
        {"sweep", Command::sweep, "every alpha with beta = 0 and one beta per class", false, false},
        {"verify", Command::verify, "the full property suite", false, false},
    };
    std::map<CLI::App*, Command> commands;
    for (const auto& s : subs) {
        auto* cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, cfg, f, s.beta, s.alpha);
        if (s.command == Command::weil)
            cmd->add_option("--a", cfg.a, "multiplier a in [1, p)")->capture_default_str();
        if (s.command == Command::verify)
            cmd->add_flag("--corrupt-modulus", cfg.corrupt_modulus)->group("");
        commands[cmd] = s.command;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const auto& [cmd, command] : commands) {
        if (cmd->parsed())
            cfg.command = command;
    }
    if (f.beta_index) {
        cfg.beta.kind = BetaSpec::Kind::index;
        cfg.beta.index = *f.beta_index;
    } else if (!f.beta_coeffs.empty()) {
        cfg.beta.kind = BetaSpec::Kind::coeffs;
        cfg.beta.coeffs = f.beta_coeffs;
    }
    if (!f.cache_dir.empty())
        cfg.cache_dir = f.cache_dir;
    if (!f.out.empty())
        cfg.out = f.out;
    if (f.q_limit != 0)
        cfg.q_limit = f.q_limit;
    return run(cfg, std::cerr);
}
