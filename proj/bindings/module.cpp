// Python bridge. Designs, systems and certificates cross the boundary as
// JSON strings; the sunweave package wraps them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sunweave/common.hpp"
#include "sunweave/design.hpp"
#include "sunweave/embedder.hpp"
#include "sunweave/io.hpp"
#include "sunweave/sun_factory.hpp"
#include "sunweave/triple_system.hpp"

namespace py = pybind11;

namespace {

std::string generate_sts_json(int n) {
    return sunweave::triples_to_json(sunweave::generate_sts(n)).dump();
}

std::string sts13_json(const std::string& variant) {
    if (variant != "cyclic" && variant != "noncyclic")
        throw std::invalid_argument("variant must be 'cyclic' or 'noncyclic'");
    return sunweave::triples_to_json(
               sunweave::sts13(variant == "cyclic" ? sunweave::Sts13Class::cyclic
                                                   : sunweave::Sts13Class::noncyclic))
        .dump();
}

std::string kts_json(int v) { return sunweave::triples_to_json(sunweave::kts(v)).dump(); }

std::string sun_system_json(int m, std::uint64_t seed) {
    return sunweave::design_to_json(sunweave::sun_system(m, seed)).dump();
}

std::string bull_sun_design_json(int k, int h) {
    return sunweave::design_to_json(sunweave::bull_sun_design(k, h)).dump();
}

std::string embed_json(const std::string& sts_json, std::uint64_t seed) {
    auto s = sunweave::triples_from_json(nlohmann::json::parse(sts_json));
    auto rep = sunweave::verify_triple_system(s);
    if (!rep.ok)
        throw std::invalid_argument("input is not a Steiner triple system: " +
                                    (rep.problems.empty() ? "invalid" : rep.problems[0]));
    sunweave::EmbedOptions opts;
    opts.seed = seed;
    return sunweave::certificate_to_json(sunweave::embed(s, opts)).dump();
}

std::pair<bool, std::vector<std::string>> verify_embedding_json(const std::string& cert_json) {
    auto cert = sunweave::certificate_from_json(nlohmann::json::parse(cert_json));
    auto rep = sunweave::verify_embedding(cert);
    return {rep.ok, rep.violations};
}

std::pair<bool, std::string> verify_design_json(const std::string& design_json) {
    auto d = sunweave::design_from_json(nlohmann::json::parse(design_json));
    auto rep = sunweave::verify_decomposition(d);
    return {rep.ok, rep.summary()};
}

std::string design_text_to_json(const std::string& text) {
    return sunweave::design_to_json(sunweave::design_from_text(text)).dump();
}

}  // namespace

PYBIND11_MODULE(_sunweave, m) {
    m.doc() = "3-sun embeddings of Steiner triple systems at minimum admissible order";

    py::register_exception<sunweave::SearchError>(m, "SearchError");
    py::register_exception<sunweave::ParseError>(m, "ParseError");

    m.def("u_min", &sunweave::u_min, py::arg("n"),
          "Minimum u such that every STS(n) embeds into some 3-sun system of order n+u");
    m.def("sts_order_admissible", &sunweave::sts_order_admissible, py::arg("n"));
    m.def("sun_order_admissible", &sunweave::sun_order_admissible, py::arg("m"));

    m.def("generate_sts_json", &generate_sts_json, py::arg("n"));
    m.def("sts13_json", &sts13_json, py::arg("variant"));
    m.def("kts_json", &kts_json, py::arg("v"));
    m.def("sun_system_json", &sun_system_json, py::arg("m"),
          py::arg("seed") = sunweave::kDefaultSeed);
    m.def("bull_sun_design_json", &bull_sun_design_json, py::arg("k"), py::arg("h"));

    m.def("embed_json", &embed_json, py::arg("sts_json"),
          py::arg("seed") = sunweave::kDefaultSeed);
    m.def("verify_embedding_json", &verify_embedding_json, py::arg("cert_json"));
    m.def("verify_design_json", &verify_design_json, py::arg("design_json"));
    m.def("design_text_to_json", &design_text_to_json, py::arg("text"));
}
