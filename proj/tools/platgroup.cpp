// platgroup: presentations and invariants of plat-position link complements.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "platgroup/platgroup.hpp"

namespace pg = platgroup;
using nlohmann::json;

namespace {

constexpr const char* version = "0.1.0";

enum Exit { ok = 0, invariance_failure = 1, input_failure = 2, limit_abort = 3 };

void emit(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

json presentation_json(const pg::Presentation& p) {
    json gens = json::array(), rels = json::array();
    for (const auto& g : p.generators) gens.push_back(pg::to_string(g));
    for (const auto& r : p.relators) rels.push_back(pg::to_string(r));
    return {{"generators", gens}, {"relators", rels}};
}

pg::PlatDiagram load(const std::string& file, int k_override) {
    pg::PlatDiagram d = pg::read_plat_file(file);
    if (k_override > 0) d.k = k_override;
    pg::validate(d);
    return d;
}

json input_json(const std::string& file, const pg::PlatDiagram& d) {
    const pg::PlatInfo info = pg::validate(d);
    return {{"file", file}, {"m", d.m}, {"k", d.k}, {"alpha", pg::to_string(d.alpha)},
            {"beta", pg::to_string(d.beta)}, {"components", info.components}};
}

std::vector<pg::FiniteGroupSpec> battery_from(const std::string& targets, bool a5) {
    std::vector<pg::FiniteGroupSpec> out;
    std::stringstream ss(targets);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) out.push_back(pg::groups::by_name(tok));
    if (a5 && std::none_of(out.begin(), out.end(), [](const auto& q) { return q.name() == "A5"; }))
        out.push_back(pg::groups::A5());
    if (out.empty()) throw pg::input_error("--targets names no groups");
    return out;
}

// the negative control for verify: every moved diagram also kills the square of a meridian
pg::Presentation corrupt(pg::Presentation p) {
    const pg::Generator g = pg::Generator::g(1, 1);
    p.relators.push_back(pg::power(pg::GroupWord(g), 2));
    return pg::normalize(std::move(p));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Presentations and invariants of horizontal configurations in plat-position link complements"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output");

    std::string file, corpus, targets = "s3,s4,a4,d5", side = "upper", gamma, word;
    int k = 0, budget = pg::default_tietze_budget, moves = 3, cap = 0, cup = 0, sign = 1, n = 0, lk = 0;
    std::uint64_t limit = pg::HomLimits{}.max_nodes, seed = 7;
    bool simplify = false, a5 = false, report = false, timing = false, inject = false, no_lemmas = false;
    std::vector<int> ks;

    auto* present = app.add_subcommand("present", "print the presentation of the configuration group");
    present->add_option("file", file, "plat file")->required();
    present->add_option("--k", k, "number of points (overrides the file)")->check(CLI::PositiveNumber);
    present->add_flag("--simplify", simplify, "also print the Tietze-simplified presentation");
    present->add_option("--budget", budget, "Tietze move budget")->check(CLI::NonNegativeNumber);
    present->add_flag("--pretty", pretty, "text presentation");

    auto* invariants = app.add_subcommand("invariants", "abelianization and finite-quotient counts");
    invariants->add_option("file", file, "plat file")->required();
    invariants->add_option("--k", k, "number of points (overrides the file)")->check(CLI::PositiveNumber);
    invariants->add_option("--targets", targets, "comma-separated groups from s3,s4,a4,d5,a5");
    invariants->add_flag("--a5", a5, "add A5 to the targets");
    invariants->add_option("--budget", budget, "Tietze move budget")->check(CLI::NonNegativeNumber);
    invariants->add_option("--limit", limit, "search-node limit per hom count");
    invariants->add_flag("--report", report, "full report: input, presentations, fingerprint, Alexander polynomial");
    invariants->add_flag("--timing", timing, "include wall-clock time in the report");
    invariants->add_flag("--pretty", pretty, "indented output");

    auto* verify = app.add_subcommand("verify", "check invariance of fingerprints under moves over a corpus");
    verify->add_option("corpus", corpus, "directory of .plat files")->required();
    verify->add_option("--moves", moves, "random Heegaard moves per diagram")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--k", ks, "values of k to test (default: each file's own)")->delimiter(',');
    verify->add_option("--targets", targets, "comma-separated groups from s3,s4,a4,d5,a5");
    verify->add_option("--limit", limit, "search-node limit per hom count");
    verify->add_flag("--no-lemmas", no_lemmas, "skip the U1/U2/U3 checks");
    verify->add_flag("--inject-fault", inject, "corrupt every moved diagram (negative control)")->group("");
    verify->add_flag("--pretty", pretty, "one line per check");

    auto* stab = app.add_subcommand("stabilize", "add a cap/cup pair");
    stab->add_option("file", file, "plat file")->required();
    stab->add_option("--side", side, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));

    auto* move = app.add_subcommand("move", "apply a Heegaard move");
    move->add_option("file", file, "plat file")->required();
    auto* cap_opt = move->add_option("--cap", cap, "twist cap pair j");
    auto* cup_opt = move->add_option("--cup", cup, "twist cup pair j");
    auto* gamma_opt = move->add_option("--gamma", gamma, "reparametrize both sides by this braid word");
    cap_opt->excludes(cup_opt)->excludes(gamma_opt);
    cup_opt->excludes(gamma_opt);
    move->add_option("--sign", sign, "+1 or -1")->check(CLI::IsMember({1, -1}));

    auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a knot");
    alex->add_option("file", file, "plat file")->required();

    auto* bur = app.add_subcommand("burau", "Burau matrix of a braid word");
    bur->add_option("--n", n, "strands")->required();
    bur->add_option("--word", word, "braid word, e.g. \"1 -2 1\"")->required();
    bur->add_flag("--pretty", pretty, "indented output");

    auto* ld = app.add_subcommand("lawrence-dim", "rank of the Lawrence representation");
    ld->add_option("--n", n, "punctures")->required();
    ld->add_option("--k", lk, "points")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_failure;
    }

    try {
        if (*present) {
            const pg::PlatDiagram d = load(file, k);
            const pg::Presentation raw = pg::plat_group(d);
            if (pretty) {
                std::cout << pg::to_text(raw);
                if (simplify) std::cout << "\n" << pg::to_text(pg::tietze_simplify(raw, budget));
                return ok;
            }
            json out{{"input", input_json(file, d)}, {"version", version}};
            out["presentation"]["raw"] = presentation_json(raw);
            if (simplify) out["presentation"]["simplified"] = presentation_json(pg::tietze_simplify(raw, budget));
            emit(out, false);
            return ok;
        }
        if (*invariants) {
            const auto start = std::chrono::steady_clock::now();
            const pg::PlatDiagram d = load(file, k);
            const pg::Presentation raw = pg::plat_group(d);
            const pg::FingerprintOptions opts{budget, {limit}};
            const pg::Fingerprint fp = pg::fingerprint(raw, battery_from(targets, a5), opts);
            if (!report) {
                emit(pg::to_json(fp), pretty);
            } else {
                json out{{"input", input_json(file, d)}, {"fingerprint", pg::to_json(fp)}, {"version", version}};
                out["presentation"]["raw"] = presentation_json(raw);
                out["presentation"]["simplified"] = presentation_json(pg::tietze_simplify(raw, budget));
                if (d.k == 1 && pg::validate(d).components == 1)
                    out["alexander"] = pg::alexander_invariant(d).to_string();
                if (timing)
                    out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                emit(out, pretty);
            }
            if (!fp.complete()) {
                std::cerr << "error: homomorphism search hit the node limit (" << limit << ")\n";
                return limit_abort;
            }
            return ok;
        }
        if (*verify) {
            pg::VerifyOptions opts;
            opts.moves = moves;
            opts.seed = seed;
            opts.ks = ks;
            opts.battery = battery_from(targets, false);
            opts.fingerprint.limits.max_nodes = limit;
            opts.lemma_checks = !no_lemmas;
            if (inject) opts.fault = corrupt;
            const pg::VerifyReport rep = pg::verify_corpus(corpus, opts);
            for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
            if (pretty) {
                for (const auto& e : rep.entries) {
                    if (!e.error.empty()) std::cout << "FAIL " << e.name << " k=" << e.k << ": " << e.error << "\n";
                    for (const auto& c : e.checks) {
                        std::cout << (c.ok ? "ok   " : "FAIL ") << e.name << " k=" << e.k << ": " << c.step << "\n";
                        if (!c.ok) std::cout << "     before " << c.before.dump() << "\n     after  " << c.after.dump() << "\n";
                    }
                }
                for (const auto& l : rep.lemmas) {
                    std::cout << (l.passed() ? "ok   " : "FAIL ") << "U1/U2/U3 n=" << l.n << " k=" << l.k << "\n";
                    for (const auto& f : l.failures) std::cout << "     " << f << "\n";
                }
                std::cout << (rep.ok() ? "all checks passed" : "invariance check failed") << "\n";
            } else {
                emit(pg::to_json(rep), false);
            }
            bool aborted = false;
            for (const auto& e : rep.entries)
                for (const auto& c : e.checks)
                    if (c.after.contains("homs"))
                        for (const auto& [name, v] : c.after["homs"].items()) aborted = aborted || v.is_null();
            if (rep.ok()) return ok;
            return aborted ? limit_abort : invariance_failure;
        }
        if (*stab) {
            const pg::PlatDiagram d = load(file, 0);
            std::cout << pg::to_plat_text(pg::stabilize(d, side == "upper" ? pg::Side::Upper : pg::Side::Lower));
            return ok;
        }
        if (*move) {
            const pg::PlatDiagram d = load(file, 0);
            pg::HeegaardMove mv;
            if (*cap_opt)
                mv = pg::HeegaardMove::cap_twist(cap, sign);
            else if (*cup_opt)
                mv = pg::HeegaardMove::cup_twist(cup, sign);
            else if (*gamma_opt)
                mv = pg::HeegaardMove::reparametrize(pg::parse_braid(gamma, d.m));
            else
                throw pg::input_error("move needs one of --cap, --cup, --gamma");
            std::cout << pg::to_plat_text(pg::heegaard_move(d, mv));
            return ok;
        }
        if (*alex) {
            std::cout << pg::alexander_invariant(load(file, 0)).to_string() << "\n";
            return ok;
        }
        if (*bur) {
            if (n < 1) throw pg::input_error("--n must be at least 1");
            emit(pg::to_json(pg::burau(pg::parse_braid(word, n))), pretty);
            return ok;
        }
        if (*ld) {
            std::cout << pg::lawrence_dim(n, lk) << "\n";
            return ok;
        }
    } catch (const pg::limit_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return limit_abort;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_failure;
    }
    return ok;
}
