// klms: exact Kazhdan-Lusztig / multisegment calculator.
//
// Subcommands: kl, pkl, poset, phi, phiinv, reduce, verify.
// Every command prints a human-readable summary followed by one line of
// JSON; --quiet drops the summary. Exit codes: 0 ok, 1 verification
// failures, 2 parse errors, 3 precondition violations, 4 enumeration cap
// exceeded, 5 realization failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "klms/klms.hpp"

using json = nlohmann::ordered_json;

namespace {

size_t enum_cap() {
    const char* env = std::getenv("KLMS_ENUM_CAP");
    if (env == nullptr || *env == '\0') return klms::kDefaultEnumCap;
    try {
        long long v = std::stoll(env);
        if (v < 1) throw std::invalid_argument("nonpositive");
        return static_cast<size_t>(v);
    } catch (const std::exception&) {
        throw klms::parse_error("KLMS_ENUM_CAP must be a positive integer, got '" +
                                std::string(env) + "'");
    }
}

json poly_json(const klms::HalfExpPoly& p) {
    json arr = json::array();
    for (const auto& [n, c] : p.to_pairs()) arr.push_back({n, c.to_int64()});
    return arr;
}

void emit(const std::vector<std::string>& human, const json& j, bool quiet) {
    if (!quiet)
        for (const std::string& line : human) std::cout << line << "\n";
    std::cout << j.dump() << "\n";
}

struct KlArgs {
    int n = 0;
    std::string x, y, j1, j2;
    bool has_j1 = false, has_j2 = false, quiet = false;
};

int run_kl(const KlArgs& a) {
    klms::KLEngine engine(a.n);
    klms::Permutation x = klms::Permutation::parse(a.x);
    klms::Permutation y = klms::Permutation::parse(a.y);
    klms::HalfExpPoly p;
    klms::BigInt mu;
    if (a.has_j1 || a.has_j2) {
        klms::GenSet j1 = klms::GenSet::parse(a.j1, a.n);
        klms::GenSet j2 = klms::GenSet::parse(a.j2, a.n);
        p = engine.double_parabolic(x, y, j1, j2);
        mu = engine.mu(klms::max_double_coset_element(x, j1, j2),
                       klms::max_double_coset_element(y, j1, j2));
    } else {
        p = engine.kl(x, y);
        mu = engine.mu(x, y);
    }
    json out;
    out["poly"] = poly_json(p);
    out["pretty"] = p.to_text();
    out["mu"] = mu.to_int64();
    emit({"P = " + p.to_text(), "mu = " + mu.to_string()}, out, a.quiet);
    return 0;
}

struct PklArgs {
    int n = 0;
    std::string j, v1, v2;
    bool quiet = false;
};

int run_pkl(const PklArgs& a) {
    klms::KLEngine engine(a.n);
    klms::GenSet j = klms::GenSet::parse(a.j, a.n);
    klms::Permutation v1 = klms::Permutation::parse(a.v1);
    klms::Permutation v2 = klms::Permutation::parse(a.v2);
    klms::HalfExpPoly p = engine.parabolic(v1, v2, j);
    klms::Permutation wj = klms::longest_element(j);
    klms::BigInt mu = engine.mu(v1 * wj, v2 * wj);
    json out;
    out["poly"] = poly_json(p);
    out["pretty"] = p.to_text();
    out["mu"] = mu.to_int64();
    emit({"P^J = " + p.to_text(), "mu = " + mu.to_string()}, out, a.quiet);
    return 0;
}

struct PosetArgs {
    std::string ms, dot;
    bool quiet = false;
};

int run_poset(const PosetArgs& a) {
    klms::Multisegment root = klms::Multisegment::parse(a.ms);
    klms::MsPoset p = klms::MsPoset::enumerate(root, enum_cap());
    json out;
    out["root"] = root.to_string();
    out["size"] = p.size();
    json elems = json::array();
    for (const klms::Multisegment& m : p.elements()) elems.push_back(m.to_string());
    out["elements"] = elems;
    json covers = json::array();
    for (const auto& [upper, lower] : p.covers()) covers.push_back({upper, lower});
    out["covers"] = covers;
    out["minimum"] = p.minimum().to_string();
    if (!a.dot.empty()) {
        std::ofstream f(a.dot);
        if (!f) throw klms::error("cannot write DOT file '" + a.dot + "'");
        f << p.to_dot();
        out["dot"] = a.dot;
    }
    emit({"S(" + root.to_string() + "): " + std::to_string(p.size()) + " elements, " +
              std::to_string(p.covers().size()) + " cover edges",
          "minimum: " + p.minimum().to_string()},
         out, a.quiet);
    return 0;
}

struct PhiArgs {
    int n = 0;
    std::string j1, j2, w, ms, baseline;
    bool quiet = false;
};

klms::ParamContext phi_context(const PhiArgs& a) {
    klms::GenSet j1 = klms::GenSet::parse(a.j1, a.n);
    klms::GenSet j2 = klms::GenSet::parse(a.j2, a.n);
    if (a.baseline.empty()) return klms::canonical_baseline(a.n, j1, j2, enum_cap());
    return klms::ParamContext(j1, j2, klms::Multisegment::parse(a.baseline), enum_cap());
}

int run_phi(const PhiArgs& a) {
    klms::ParamContext ctx = phi_context(a);
    klms::Permutation w = klms::Permutation::parse(a.w);
    klms::Multisegment image = klms::phi(ctx, w);
    json out;
    out["baseline"] = ctx.baseline().to_string();
    out["w"] = w.to_string();
    out["multisegment"] = image.to_string();
    emit({"phi(" + w.to_string() + ") = " + image.to_string()}, out, a.quiet);
    return 0;
}

int run_phiinv(const PhiArgs& a) {
    klms::ParamContext ctx = phi_context(a);
    klms::Multisegment m = klms::Multisegment::parse(a.ms);
    klms::Permutation w = klms::phi_inverse(ctx, m);
    json out;
    out["baseline"] = ctx.baseline().to_string();
    out["multisegment"] = m.to_string();
    out["w"] = w.to_string();
    emit({"phi^{-1}(" + m.to_string() + ") = " + w.to_string()}, out, a.quiet);
    return 0;
}

struct ReduceArgs {
    std::string ms;
    bool quiet = false;
};

json witness_json(const klms::ReductionWitness& w) {
    json out;
    out["original"] = w.original.to_string();
    out["parabolic"] = w.parabolic.to_string();
    json chain = json::array();
    for (const klms::Segment& d : w.chain) chain.push_back(d.to_string());
    out["chain"] = chain;
    out["ksequence"] = w.ksequence;
    out["anchor"] = w.anchor.to_string();
    out["rep"] = w.rep.to_string();
    out["masks"] = {{"j1", w.j1.to_string()}, {"j2", w.j2.to_string()}};
    return out;
}

int run_reduce(const ReduceArgs& a) {
    klms::Multisegment m = klms::Multisegment::parse(a.ms);
    try {
        klms::IntervalRealization real = klms::interval_realization(m, enum_cap());
        json out = witness_json(real.witness);
        out["realization_verified"] = true;
        out["interval_size"] = real.to_original.size();
        emit({"parabolic: " + real.witness.parabolic.to_string(),
              "chain: " + std::to_string(real.witness.chain.size()) + " segment(s), interval of " +
                  std::to_string(real.to_original.size()) + " element(s) verified"},
             out, a.quiet);
        return 0;
    } catch (const klms::realization_error& e) {
        json out = witness_json(klms::reduce_to_parabolic(m));
        out["realization_verified"] = false;
        out["counterexample"] = e.what();
        std::cout << out.dump() << "\n";
        return 5;
    }
}

struct VerifyArgs {
    std::string suite;
    int n = 4;
    int max_segments = 3;
    std::string span = "0..5";
    bool quiet = false;
};

std::pair<int, int> parse_span(const std::string& s) {
    size_t dots = s.find("..");
    if (dots == std::string::npos)
        throw klms::parse_error("span must look like 0..5, got '" + s + "'");
    try {
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw klms::parse_error("bad span '" + s + "'");
    }
}

int run_verify(const VerifyArgs& a) {
    std::vector<klms::VerifyReport> reports;
    if (a.suite == "relations" || a.suite == "all") {
        klms::KLEngine engine(a.n);
        reports.push_back(engine.verify_relations());
    }
    if (a.suite == "param" || a.suite == "all")
        for (int n = 2; n <= a.n; ++n) reports.push_back(klms::verify_param(n, enum_cap()));
    if (a.suite == "realization" || a.suite == "all") {
        auto [lo, hi] = parse_span(a.span);
        reports.push_back(klms::verify_realization(a.max_segments, lo, hi, enum_cap()));
    }
    long long failures = 0;
    std::vector<std::string> human;
    json suites = json::array();
    for (const klms::VerifyReport& r : reports) {
        failures += r.failures;
        human.push_back(r.summary());
        json jr;
        jr["suite"] = r.suite;
        jr["checks"] = r.checks;
        jr["failures"] = r.failures;
        jr["samples"] = r.samples;
        suites.push_back(jr);
    }
    json out;
    out["suites"] = suites;
    out["failures_total"] = failures;
    human.push_back(failures == 0 ? "all checks passed"
                                  : "FAILURES: " + std::to_string(failures));
    emit(human, out, a.quiet);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kazhdan-Lusztig polynomials, multisegment posets, and the maps between them"};
    app.require_subcommand(1);

    KlArgs kl;
    CLI::App* kl_cmd = app.add_subcommand("kl", "P_{x,y}(q); with --j1/--j2 the double-parabolic polynomial");
    kl_cmd->add_option("--n", kl.n, "rank of S_n")->required();
    kl_cmd->add_option("--x", kl.x, "one-line permutation")->required();
    kl_cmd->add_option("--y", kl.y, "one-line permutation")->required();
    auto* j1opt = kl_cmd->add_option("--j1", kl.j1, "left generator set, e.g. 1,3");
    auto* j2opt = kl_cmd->add_option("--j2", kl.j2, "right generator set");
    kl_cmd->add_flag("--quiet", kl.quiet, "JSON only");

    PklArgs pkl;
    CLI::App* pkl_cmd = app.add_subcommand("pkl", "one-sided parabolic P^J_{v1,v2}(q)");
    pkl_cmd->add_option("--n", pkl.n)->required();
    pkl_cmd->add_option("--j", pkl.j, "generator set J")->required();
    pkl_cmd->add_option("--v1", pkl.v1)->required();
    pkl_cmd->add_option("--v2", pkl.v2)->required();
    pkl_cmd->add_flag("--quiet", pkl.quiet);

    PosetArgs poset;
    CLI::App* poset_cmd = app.add_subcommand("poset", "enumerate S(a) with covers");
    poset_cmd->add_option("multisegment", poset.ms, "e.g. \"2*[0,1]+[1,2]\"")->required();
    poset_cmd->add_option("--dot", poset.dot, "write the Hasse diagram as DOT");
    poset_cmd->add_flag("--quiet,--json", poset.quiet, "JSON only");

    PhiArgs phi;
    CLI::App* phi_cmd = app.add_subcommand("phi", "parametrization map w -> multisegment");
    phi_cmd->add_option("--n", phi.n)->required();
    phi_cmd->add_option("--j1", phi.j1);
    phi_cmd->add_option("--j2", phi.j2);
    phi_cmd->add_option("--w", phi.w)->required();
    phi_cmd->add_option("--baseline", phi.baseline, "override the canonical baseline");
    phi_cmd->add_flag("--quiet", phi.quiet);

    PhiArgs phiinv;
    CLI::App* phiinv_cmd = app.add_subcommand("phiinv", "inverse parametrization");
    phiinv_cmd->add_option("--n", phiinv.n)->required();
    phiinv_cmd->add_option("--j1", phiinv.j1);
    phiinv_cmd->add_option("--j2", phiinv.j2);
    phiinv_cmd->add_option("--ms", phiinv.ms, "multisegment")->required();
    phiinv_cmd->add_option("--baseline", phiinv.baseline);
    phiinv_cmd->add_flag("--quiet", phiinv.quiet);

    ReduceArgs reduce;
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduction witness + interval realization");
    reduce_cmd->add_option("multisegment", reduce.ms)->required();
    reduce_cmd->add_flag("--quiet", reduce.quiet);

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", verify.suite, "relations | param | realization | all")
        ->required()
        ->check(CLI::IsMember({"relations", "param", "realization", "all"}));
    verify_cmd->add_option("--n", verify.n, "rank (default 4)");
    verify_cmd->add_option("--max-segments", verify.max_segments, "corpus segment bound");
    verify_cmd->add_option("--span", verify.span, "corpus span, e.g. 0..5");
    verify_cmd->add_flag("--quiet", verify.quiet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (kl_cmd->parsed()) {
            kl.has_j1 = j1opt->count() > 0;
            kl.has_j2 = j2opt->count() > 0;
            return run_kl(kl);
        }
        if (pkl_cmd->parsed()) return run_pkl(pkl);
        if (poset_cmd->parsed()) return run_poset(poset);
        if (phi_cmd->parsed()) return run_phi(phi);
        if (phiinv_cmd->parsed()) return run_phiinv(phiinv);
        if (reduce_cmd->parsed()) return run_reduce(reduce);
        if (verify_cmd->parsed()) return run_verify(verify);
    } catch (const klms::parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const klms::enumeration_cap_error& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const klms::realization_error& e) {
        std::cerr << e.what() << "\n";
        return 5;
    } catch (const klms::precondition_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const klms::error& e) {
        std::cerr << e.what() << "\n";
        return 70;
    }
    return 0;
}
