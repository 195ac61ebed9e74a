#ifndef HELLYCONE_CLI_HPP
#define HELLYCONE_CLI_HPP

#include <hellycone/gen.hpp>
#include <hellycone/json_io.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace hellycone::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 success/conclusion_holds, 2 hypothesis_fails,
// 3 tightness_witness, 4 input error, 5 internal invariant breach.
enum ExitCode : int {
    exit_ok = 0,
    exit_hypothesis_fails = 2,
    exit_tightness = 3,
    exit_input_error = 4,
    exit_internal = 5,
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
}

inline InstanceDocument load_instance(const std::string& path, std::string* raw = nullptr) {
    const std::string bytes = read_file(path);
    if (raw) *raw = bytes;
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    return instance_from_json(j);
}

inline json report_skeleton(const std::string& command, const std::string& input_bytes) {
    json j;
    j["tool"] = "hellycone";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input_hash"] = content_hash(input_bytes);
    return j;
}

inline json witness_json(const RainbowSelection& r, const ColoredSystem& sys) {
    json w;
    w["picks"] = selection_to_json(r);
    json vs = json::array();
    for (const auto& v : r.vectors_in(sys)) vs.push_back(vec_to_json(v));
    w["vectors"] = std::move(vs);
    return w;
}

inline int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::conclusion_holds: return exit_ok;
        case Verdict::hypothesis_fails: return exit_hypothesis_fails;
        case Verdict::tightness_witness: return exit_tightness;
        case Verdict::counterexample: return exit_internal;
    }
    return exit_internal;
}

inline int run_selftest(std::size_t max_d, std::ostream& out) {
    std::size_t failures = 0;
    auto check = [&](bool ok, const std::string& name) {
        out << (ok ? "PASS" : "FAIL") << ": " << name << "\n";
        if (!ok) ++failures;
    };

    bool formulas = true;
    for (std::size_t d = 1; d <= max_d; ++d) {
        formulas = formulas && helly_numbers(d, d).m == d + 1;
        for (std::size_t k = 1; k + 1 <= d; ++k) {
            formulas = formulas && helly_numbers(k, d).h == helly_numbers(d - k, d).m;
            formulas = formulas && helly_arithmetic_selftest(k, d);
        }
    }
    check(formulas, "helly number formulas and arithmetic");

    bool cross = true;
    for (std::size_t d = 2; d <= std::min<std::size_t>(max_d, 4); ++d) {
        for (std::size_t k = 1; k + 1 <= d; ++k) {
            const VectorSet a = gen_cross_polytope(k, d);
            cross = cross && lineality_dim(a) == k + 1;
            for (std::size_t drop = 0; drop < a.size(); ++drop) {
                std::vector<Vec> rest;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (i != drop) rest.push_back(a.vectors[i]);
                cross = cross && lineality_dim(VectorSet(d, rest)) <= k;
            }
        }
    }
    check(cross, "cross-polytope lineality drops under deletion");

    bool simplex = true;
    for (std::size_t d = 1; d <= std::min<std::size_t>(max_d, 4); ++d) {
        const VectorSet a = gen_simplex_vertices(d);
        simplex = simplex && lineality_dim(a) == d;
        for (std::size_t s = 1; s <= d && simplex; ++s) {
            for_each_combination(a.size(), s, [&](const std::vector<std::size_t>& idx) {
                std::vector<Vec> sub;
                for (std::size_t i : idx) sub.push_back(a.vectors[i]);
                simplex = simplex && lineality_dim(VectorSet(d, sub)) == 0;
                return !simplex;
            });
        }
    }
    check(simplex, "zero-sum simplex subsets are pointed");

    bool reay_ok = true;
    for (std::size_t d = 1; d <= std::min<std::size_t>(max_d, 3); ++d) {
        for (std::size_t k = 1; k <= d; ++k) {
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const ColoredSystem sys = gen_random_planted(d, k, d + k, 0, seed);
                const ReayDecomposition dec = reay_decompose(sys, k);
                reay_ok = reay_ok && verify_decomposition(dec, sys, k, true).pass &&
                          dec.block_count() <= k;
            }
        }
    }
    check(reay_ok, "Reay decomposition on planted instances");

    bool extremal = true;
    for (std::size_t d = 2; d <= std::min<std::size_t>(max_d, 3); ++d) {
        for (std::size_t k = 1; k + 1 <= d; ++k) {
            const ColoredSystem sys = gen_extremal_colorful(d, k + 1);
            const auto rep =
                verify_colorful_lineality(sys, k, false, sys.colors.size());
            extremal = extremal && rep.verdict == Verdict::tightness_witness;
        }
    }
    check(extremal, "extremal systems give tightness witnesses");

    out << (failures == 0 ? "selftest: all passed\n" : "selftest: FAILURES\n");
    return failures == 0 ? exit_ok : exit_internal;
}

}  // namespace detail

inline int run(int argc, const char* const* argv) {
    CLI::App app{"exact-rational cones, positive bases, and colorful Helly-type verification"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    std::string gen_kind, gen_out;
    std::size_t gen_d = 2, gen_k = 1, gen_colors = 0, gen_extra = 0;
    std::uint64_t gen_seed = 0;
    gen_cmd->add_option("kind", gen_kind,
                        "cross_polytope|simplex|extremal_colorful|optimal_size|random_planted")
        ->required();
    gen_cmd->add_option("--d", gen_d, "ambient dimension")->required();
    gen_cmd->add_option("--k", gen_k, "parameter k");
    gen_cmd->add_option("--seed", gen_seed, "PRNG seed");
    gen_cmd->add_option("--colors", gen_colors, "number of colors (random_planted)");
    gen_cmd->add_option("--extra", gen_extra, "extra vectors per color (random_planted)");
    gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

    // lineality
    auto* lin_cmd = app.add_subcommand("lineality", "lineality space per color");
    std::string lin_file, lin_out;
    long lin_color = -1;
    lin_cmd->add_option("file", lin_file, "instance JSON")->required();
    lin_cmd->add_option("--color", lin_color, "restrict to one color index");
    lin_cmd->add_option("-o,--output", lin_out, "output file (default stdout)");

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "Colorful Reay decomposition");
    std::string dec_file, dec_out;
    std::size_t dec_k = 1;
    bool dec_weak = false;
    dec_cmd->add_option("file", dec_file, "instance JSON")->required();
    dec_cmd->add_option("--k", dec_k, "target lineality dimension")->required();
    dec_cmd->add_flag("--weak", dec_weak, "weak form (no positive-basis guarantee)");
    dec_cmd->add_option("-o,--output", dec_out, "output file (default stdout)");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "theorem verification");
    std::string ver_file, ver_mode, ver_out;
    std::size_t ver_k = 1;
    bool ver_loose = false;
    std::size_t ver_jobs = 1;
    if (const char* env = std::getenv("HELLY_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) ver_jobs = static_cast<std::size_t>(v);
    }
    ver_cmd->add_option("file", ver_file, "instance JSON")->required();
    ver_cmd->add_option("--mode", ver_mode, "solutions|lineality|poly|mono")->required();
    ver_cmd->add_option("--k", ver_k, "parameter k")->required();
    ver_cmd->add_flag("--loose-colors", ver_loose, "do not enforce the color count");
    ver_cmd->add_option("--jobs", ver_jobs, "worker count (output is identical for any value)");
    ver_cmd->add_option("-o,--output", ver_out, "output file (default stdout)");

    // selftest
    auto* st_cmd = app.add_subcommand("selftest", "run the built-in acceptance checks");
    std::size_t st_max_d = 4;
    st_cmd->add_option("--max-d", st_max_d, "largest dimension to exercise");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err;
        err["error"] = {{"kind", "input"}, {"message", e.what()}};
        std::cerr << dump_canonical(err);
        return exit_input_error;
    }

    try {
        if (gen_cmd->parsed()) {
            InstanceDocument doc;
            doc.kind = "homogeneous";
            doc.dimension = gen_d;
            if (gen_kind == "cross_polytope") {
                doc.k = gen_k;
                doc.system = ColoredSystem(gen_d, {gen_cross_polytope(gen_k, gen_d)});
            } else if (gen_kind == "simplex") {
                doc.system = ColoredSystem(gen_d, {gen_simplex_vertices(gen_d)});
            } else if (gen_kind == "optimal_size") {
                doc.k = gen_k;
                doc.system = ColoredSystem(gen_d, {gen_optimal_size_example(gen_k, gen_d)});
            } else if (gen_kind == "extremal_colorful") {
                doc.k = gen_k;
                doc.system = gen_extremal_colorful(gen_d, gen_k);
            } else if (gen_kind == "random_planted") {
                doc.k = gen_k;
                const std::size_t n = gen_colors == 0 ? gen_d + gen_k : gen_colors;
                doc.system = gen_random_planted(gen_d, gen_k, n, gen_extra, gen_seed);
            } else {
                throw input_error("unknown generator kind: " + gen_kind);
            }
            detail::write_output(dump_canonical(instance_to_json(doc)), gen_out);
            return exit_ok;
        }

        if (lin_cmd->parsed()) {
            std::string raw;
            const InstanceDocument doc = detail::load_instance(lin_file, &raw);
            if (!doc.system) throw input_error("lineality: needs a homogeneous instance");
            json rep = detail::report_skeleton("lineality", raw);
            json colors = json::array();
            for (std::size_t c = 0; c < doc.system->colors.size(); ++c) {
                if (lin_color >= 0 && static_cast<std::size_t>(lin_color) != c) continue;
                auto [space, idx] = lineality_space(doc.system->colors[c]);
                json entry = subspace_to_json(space);
                entry["color"] = c;
                entry["generator_indices"] = std::vector<std::size_t>(idx.begin(), idx.end());
                colors.push_back(std::move(entry));
            }
            rep["colors"] = std::move(colors);
            detail::write_output(dump_canonical(rep), lin_out);
            return exit_ok;
        }

        if (dec_cmd->parsed()) {
            std::string raw;
            const InstanceDocument doc = detail::load_instance(dec_file, &raw);
            if (!doc.system) throw input_error("decompose: needs a homogeneous instance");
            const ReayDecomposition dec = dec_weak ? reay_decompose_weak(*doc.system, dec_k)
                                                   : reay_decompose(*doc.system, dec_k);
            const DecompositionReport check =
                verify_decomposition(dec, *doc.system, dec_k, !dec_weak);
            json rep = detail::report_skeleton("decompose", raw);
            rep["k"] = dec_k;
            rep["strong"] = !dec_weak;
            rep["decomposition"] = decomposition_to_json(dec, *doc.system);
            rep["verification"] = {{"pass", check.pass}, {"first_violation", check.first_violation}};
            detail::write_output(dump_canonical(rep), dec_out);
            return check.pass ? exit_ok : exit_internal;
        }

        if (ver_cmd->parsed()) {
            if (ver_jobs < 1) throw input_error("verify: --jobs must be >= 1");
            std::string raw;
            const InstanceDocument doc = detail::load_instance(ver_file, &raw);
            json rep = detail::report_skeleton("verify", raw);
            rep["mode"] = ver_mode;
            rep["k"] = ver_k;

            VerificationReport result;
            const ColoredSystem* sys = doc.system ? &*doc.system : nullptr;
            if (ver_mode == "solutions") {
                if (!sys) throw input_error("verify: homogeneous instance required");
                result = verify_colorful_solutions(*sys, ver_k, !ver_loose);
            } else if (ver_mode == "lineality") {
                if (!sys) throw input_error("verify: homogeneous instance required");
                result = verify_colorful_lineality(*sys, ver_k, !ver_loose);
            } else if (ver_mode == "mono") {
                if (!sys) throw input_error("verify: homogeneous instance required");
                for (const auto& c : sys->colors)
                    if (!(c.vectors == sys->colors.front().vectors))
                        throw input_error("verify --mode mono: colors must be identical");
                result = verify_monochromatic(sys->colors.front(), ver_k);
            } else if (ver_mode == "poly") {
                if (!doc.families) throw input_error("verify: polyhedral instance required");
                result = verify_nonhomogeneous(*doc.families, ver_k, !ver_loose);
            } else {
                throw input_error("unknown verify mode: " + ver_mode);
            }

            rep["verdict"] = verdict_name(result.verdict);
            json witnesses = json::array();
            if (result.violating) {
                if (sys) {
                    witnesses.push_back(detail::witness_json(*result.violating, *sys));
                } else {
                    json w;
                    w["picks"] = selection_to_json(*result.violating);
                    witnesses.push_back(std::move(w));
                }
            }
            rep["witnesses"] = std::move(witnesses);
            if (result.satisfying_color) rep["satisfying_color"] = *result.satisfying_color;
            if (result.witness_metric) rep["witness_metric"] = *result.witness_metric;
            detail::write_output(dump_canonical(rep), ver_out);
            return detail::verdict_exit(result.verdict);
        }

        if (st_cmd->parsed()) return detail::run_selftest(st_max_d, std::cout);
    } catch (const input_error& e) {
        json err;
        err["error"] = {{"kind", "input"}, {"message", e.what()}};
        std::cerr << dump_canonical(err);
        return exit_input_error;
    } catch (const invariant_error& e) {
        json err;
        err["error"] = {{"kind", "internal"}, {"message", e.what()}};
        std::cerr << dump_canonical(err);
        return exit_internal;
    }
    return exit_input_error;
}

}  // namespace hellycone::cli

#endif  // HELLYCONE_CLI_HPP
