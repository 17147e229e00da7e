// sunweave: construct and verify minimum-order 3-sun embeddings of
// Steiner triple systems.
//
// Exit codes: 0 ok, 1 verification failed, 2 bad input/usage, 3 search failure.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sunweave/common.hpp"
#include "sunweave/design.hpp"
#include "sunweave/embedder.hpp"
#include "sunweave/io.hpp"
#include "sunweave/sun_factory.hpp"
#include "sunweave/triple_system.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSearch = 3;

bool looks_like_json(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        return c == '{' || c == '[';
    }
    return false;
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    } else {
        sunweave::write_file_atomic(out_path, payload);
    }
}

std::string with_seed(nlohmann::json j, std::uint64_t seed) {
    j["seed"] = seed;
    return j.dump(2);
}

std::string with_seed(const std::string& text, std::uint64_t seed) {
    return "# seed " + std::to_string(seed) + "\n" + text;
}

sunweave::TripleSystem load_triples(const std::string& path) {
    std::string raw = sunweave::read_file(path);
    if (looks_like_json(raw))
        return sunweave::triples_from_json(nlohmann::json::parse(raw));
    return sunweave::triples_from_text(raw);
}

int run_construct(int n, const std::string& sts_file, std::uint64_t seed,
                  const std::string& out_path) {
    sunweave::TripleSystem s;
    if (!sts_file.empty()) {
        s = load_triples(sts_file);
    } else {
        if (!sunweave::sts_order_admissible(n)) {
            std::cerr << "no STS(" << n << "): order must be 1 or 3 (mod 6)\n";
            return kExitUsage;
        }
        s = sunweave::generate_sts(n);
    }
    auto srep = sunweave::verify_triple_system(s);
    if (!srep.ok) {
        std::cerr << "input is not a Steiner triple system:\n";
        for (const auto& p : srep.problems) std::cerr << "  " << p << '\n';
        return kExitUsage;
    }

    sunweave::EmbedOptions opts;
    opts.seed = seed;
    sunweave::EmbeddingCertificate cert = sunweave::embed(s, opts);
    auto rep = sunweave::verify_embedding(cert);
    if (!rep.ok) {
        std::cerr << "internal error: produced certificate fails verification\n";
        for (const auto& v : rep.violations) std::cerr << "  " << v << '\n';
        return kExitSearch;
    }
    emit(out_path, with_seed(sunweave::certificate_to_json(cert), seed));
    std::cout << "order " << (s.order + cert.u) << " suns " << cert.design.blocks.size()
              << " verified\n";
    return kExitOk;
}

int report_design(const sunweave::Design& d) {
    auto rep = sunweave::verify_decomposition(d);
    if (rep.ok) {
        std::cout << "ok: " << d.blocks.size() << " blocks partition the host ("
                  << d.host().size() << " edges)\n";
        return kExitOk;
    }
    if (!rep.missing.empty()) std::cout << "missing edges: " << rep.missing.size() << '\n';
    if (!rep.duplicated.empty())
        std::cout << "duplicated edges: " << rep.duplicated.size() << '\n';
    if (!rep.foreign.empty()) std::cout << "foreign edges: " << rep.foreign.size() << '\n';
    for (const auto& p : rep.problems) std::cout << p << '\n';
    return kExitVerify;
}

int report_certificate(const sunweave::EmbeddingCertificate& c) {
    auto rep = sunweave::verify_embedding(c);
    if (rep.ok) {
        std::cout << "ok: STS(" << c.sts.order << ") embedded in a 3-sun system of order "
                  << (c.sts.order + c.u) << '\n';
        return kExitOk;
    }
    for (const auto& v : rep.violations) std::cout << v << '\n';
    return kExitVerify;
}

int run_verify(const std::string& path) {
    std::string raw = sunweave::read_file(path);
    if (looks_like_json(raw)) {
        nlohmann::json j = nlohmann::json::parse(raw);
        if (j.is_object() && j.contains("map"))
            return report_certificate(sunweave::certificate_from_json(j));
        return report_design(sunweave::design_from_json(j));
    }
    return report_design(sunweave::design_from_text(raw));
}

int run_gen(const std::string& kind, int n, int m, int v, int k, int h,
            const std::string& variant, std::uint64_t seed, const std::string& format,
            const std::string& out_path) {
    bool text = format == "text";
    if (kind == "sts") {
        if (!sunweave::sts_order_admissible(n)) {
            std::cerr << "no STS(" << n << ")\n";
            return kExitUsage;
        }
        sunweave::TripleSystem s;
        if (n == 13 && !variant.empty())
            s = sunweave::sts13(variant == "cyclic" ? sunweave::Sts13Class::cyclic
                                                    : sunweave::Sts13Class::noncyclic);
        else
            s = sunweave::generate_sts(n);
        emit(out_path, text ? with_seed(sunweave::triples_to_text(s), seed)
                            : with_seed(sunweave::triples_to_json(s), seed));
        return kExitOk;
    }
    if (kind == "kts") {
        if (v != 9 && v != 21 && v != 33) {
            std::cerr << "kts supports v in {9, 21, 33}\n";
            return kExitUsage;
        }
        sunweave::TripleSystem s = sunweave::kts(v);
        emit(out_path, text ? with_seed(sunweave::triples_to_text(s), seed)
                            : with_seed(sunweave::triples_to_json(s), seed));
        return kExitOk;
    }
    if (kind == "3ss") {
        if (!sunweave::sun_order_admissible(m)) {
            std::cerr << "no 3-sun system of order " << m
                      << ": need m == 0,1,4,9 (mod 12), m != 4\n";
            return kExitUsage;
        }
        sunweave::Design d = sunweave::sun_system(m, seed);
        emit(out_path, text ? with_seed(sunweave::design_to_text(d), seed)
                            : with_seed(sunweave::design_to_json(d), seed));
        return kExitOk;
    }
    if (kind == "bull-design") {
        if (k < 3 || (h != 5 && h != 8 && h != 9 && h != 12)) {
            std::cerr << "bull-design needs k >= 3 and h in {5, 8, 9, 12}\n";
            return kExitUsage;
        }
        sunweave::Design d = sunweave::bull_sun_design(k, h);
        emit(out_path, text ? with_seed(sunweave::design_to_text(d), seed)
                            : with_seed(sunweave::design_to_json(d), seed));
        return kExitOk;
    }
    std::cerr << "unknown kind '" << kind << "' (sts | kts | 3ss | bull-design)\n";
    return kExitUsage;
}

struct SweepRow {
    std::string label;
    int n = 0, u = 0, order = 0;
    std::size_t suns = 0;
    bool ok = false;
    std::string note;
};

int run_sweep(int max_n, std::uint64_t seed) {
    std::vector<std::pair<int, std::string>> inputs;
    for (int n = 1; n <= max_n; ++n) {
        if (!sunweave::sts_order_admissible(n)) continue;
        if (n == 13) {
            inputs.emplace_back(n, "cyclic");
            inputs.emplace_back(n, "noncyclic");
        } else {
            inputs.emplace_back(n, "");
        }
    }

    bool any_fail = false;
    bool any_search_fail = false;
    std::printf("%5s %4s %6s %5s  %s\n", "n", "u", "order", "suns", "ok");
    for (const auto& [n, variant] : inputs) {
        sunweave::TripleSystem s =
            variant.empty()
                ? sunweave::generate_sts(n)
                : sunweave::sts13(variant == "cyclic" ? sunweave::Sts13Class::cyclic
                                                      : sunweave::Sts13Class::noncyclic);
        SweepRow row;
        row.n = n;
        try {
            sunweave::EmbedOptions opts;
            opts.seed = seed;
            auto cert = sunweave::embed(s, opts);
            row.u = cert.u;
            row.order = n + cert.u;
            row.suns = cert.design.blocks.size();
            row.ok = sunweave::verify_embedding(cert).ok;
            if (!row.ok) any_fail = true;
        } catch (const sunweave::SearchError& e) {
            row.note = e.what();
            any_search_fail = true;
        }
        if (row.note.empty())
            std::printf("%5d %4d %6d %5zu  %s\n", row.n, row.u, row.order, row.suns,
                        row.ok ? "ok" : "FAIL");
        else
            std::printf("%5d %4s %6s %5s  FAIL (%s)\n", row.n, "-", "-", "-",
                        row.note.c_str());
    }
    if (any_search_fail) return kExitSearch;
    return any_fail ? kExitVerify : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-sun embeddings of Steiner triple systems at minimum order"};
    app.require_subcommand(1);

    std::uint64_t seed = sunweave::kDefaultSeed;
    std::string out_path, sts_file, verify_file, kind, variant, format = "json";
    int n = 0, m = 0, v = 0, k = 3, h = 5, max_n = 99;

    auto* construct = app.add_subcommand(
        "construct", "Embed an STS(n) into a 3-sun system of order n + u_min(n)");
    auto* c_n = construct->add_option("--n", n, "Order of the generated input system");
    auto* c_f = construct->add_option("--sts", sts_file, "Input system file (JSON or text)")
                    ->check(CLI::ExistingFile);
    construct->add_option("--seed", seed, "Search seed");
    construct->add_option("--out", out_path, "Certificate output path (default stdout)");

    auto* verify =
        app.add_subcommand("verify", "Check a design or certificate file; writes nothing");
    verify->add_option("file", verify_file, "Design or certificate (JSON or text)")
        ->required()
        ->check(CLI::ExistingFile);

    auto* umin = app.add_subcommand("umin", "Print u_min(n)");
    umin->add_option("--n", n, "STS order")->required();

    auto* gen = app.add_subcommand("gen", "Generate a fixture design or system");
    gen->set_help_flag("--help", "Print help");  // frees -h for the design parameter
    gen->add_option("--kind", kind, "sts | kts | 3ss | bull-design")->required();
    gen->add_option("--n", n, "STS order (kind sts)");
    gen->add_option("--m", m, "3-sun system order (kind 3ss)");
    gen->add_option("--v", v, "Kirkman system order (kind kts)");
    gen->add_option("--k", k, "bull-design parameter k >= 3");
    gen->add_option("--h", h, "bull-design parameter h in {5,8,9,12}");
    gen->add_option("--variant", variant, "cyclic | noncyclic (n = 13 only)");
    gen->add_option("--seed", seed, "Search seed");
    gen->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    gen->add_option("--out", out_path, "Output path (default stdout)");

    auto* gen_sts = app.add_subcommand("gen-sts", "Generate an STS(n) fixture");
    gen_sts->add_option("--n", n, "STS order")->required();
    gen_sts->add_option("--variant", variant, "cyclic | noncyclic (n = 13 only)");
    gen_sts->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    gen_sts->add_option("--out", out_path, "Output path (default stdout)");

    auto* gen_sun = app.add_subcommand("gen-sun", "Generate a 3-sun system of order m");
    gen_sun->add_option("--m", m, "System order")->required();
    gen_sun->add_option("--seed", seed, "Search seed");
    gen_sun->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    gen_sun->add_option("--out", out_path, "Output path (default stdout)");

    auto* sweep =
        app.add_subcommand("sweep", "Embed and verify every admissible order up to max-n");
    sweep->add_option("--max-n", max_n, "Largest input order");
    sweep->add_option("--seed", seed, "Search seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            if (!*c_n && !*c_f) {
                std::cerr << "construct needs --n or --sts\n";
                return kExitUsage;
            }
            return run_construct(n, sts_file, seed, out_path);
        }
        if (verify->parsed()) return run_verify(verify_file);
        if (umin->parsed()) {
            if (!sunweave::sts_order_admissible(n)) {
                std::cerr << "no STS(" << n << ")\n";
                return kExitUsage;
            }
            std::cout << sunweave::u_min(n) << '\n';
            return kExitOk;
        }
        if (gen->parsed()) return run_gen(kind, n, m, v, k, h, variant, seed, format, out_path);
        if (gen_sts->parsed())
            return run_gen("sts", n, m, v, k, h, variant, seed, format, out_path);
        if (gen_sun->parsed())
            return run_gen("3ss", n, m, v, k, h, variant, seed, format, out_path);
        if (sweep->parsed()) return run_sweep(max_n, seed);
    } catch (const sunweave::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sunweave::SearchError& e) {
        std::cerr << "search failed: " << e.what() << '\n';
        return kExitSearch;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
