#include "sunweave/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sunweave {

namespace {

nlohmann::json block_to_json(const Block& b) {
    nlohmann::json j;
    j["kind"] = std::string(kind_name(b.kind));
    auto vs = b.vertices();
    j["v"] = std::vector<int>(vs.begin(), vs.end());
    return j;
}

Block block_from_json(const nlohmann::json& j) {
    BlockKind kind = kind_from_name(j.at("kind").get<std::string>());
    std::vector<int> v = j.at("v").get<std::vector<int>>();
    return make_block(kind, v);
}

std::string block_to_text(const Block& b) {
    std::ostringstream os;
    os << "(" << b.v[0] << "," << b.v[1] << "," << b.v[2];
    int extra = vertex_count(b.kind) - 3;
    for (int i = 0; i < extra; ++i) os << (i == 0 ? "; " : ",") << b.v[3 + i];
    os << ")";
    return os.str();
}

// One "(a,b,c)".."(a,b,c; d,e,f)" group. Markup around and inside groups
// (bold markers, braces, backslashes) has already been stripped.
Block block_from_fields(const std::vector<int>& head, const std::vector<int>& tail,
                        int line_no) {
    if (head.size() != 3)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected three triangle labels");
    std::vector<int> labels = head;
    labels.insert(labels.end(), tail.begin(), tail.end());
    switch (tail.size()) {
        case 0: return make_block(BlockKind::triangle, labels);
        case 1: return make_block(BlockKind::kite, labels);
        case 2: return make_block(BlockKind::bull, labels);
        case 3: return make_block(BlockKind::sun, labels);
        default:
            throw ParseError("line " + std::to_string(line_no) +
                             ": too many pendant labels");
    }
}

}  // namespace

nlohmann::json design_to_json(const Design& d) {
    nlohmann::json j;
    j["points"] = d.points;
    if (d.host_edges) {
        auto arr = nlohmann::json::array();
        for (const Edge& e : *d.host_edges) arr.push_back({e.a, e.b});
        j["host"] = std::move(arr);
    } else {
        j["host"] = "complete";
    }
    if (d.partial) j["partial"] = true;
    auto blocks = nlohmann::json::array();
    for (const Block& b : d.blocks) blocks.push_back(block_to_json(b));
    j["blocks"] = std::move(blocks);
    return j;
}

Design design_from_json(const nlohmann::json& j) {
    Design d;
    try {
        d.points = j.at("points").get<int>();
        const auto& host = j.at("host");
        if (host.is_string()) {
            if (host.get<std::string>() != "complete")
                throw ParseError("host must be \"complete\" or an edge list");
        } else {
            d.host_edges.emplace();
            for (const auto& e : host)
                d.host_edges->push_back(edge(e.at(0).get<int>(), e.at(1).get<int>()));
        }
        d.partial = j.value("partial", false);
        for (const auto& bj : j.at("blocks")) d.blocks.push_back(block_from_json(bj));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad design JSON: ") + e.what());
    } catch (const MalformedBlock& e) {
        throw ParseError(std::string("bad design JSON: ") + e.what());
    }
    return d;
}

std::string design_to_text(const Design& d) {
    std::ostringstream os;
    os << "points " << d.points << "\n";
    if (d.partial) os << "partial\n";
    for (const Block& b : d.blocks) os << block_to_text(b) << "\n";
    return os.str();
}

Design design_from_text(std::string_view text) {
    Design d;
    bool saw_points = false;
    int max_label = -1;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        // Drop markup, keep digits, separators and parentheses.
        std::string line;
        for (char c : raw)
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
                c == ',' || c == ';' || c == ' ' || c == '\t')
                line += c;
            else if (c == '-')
                line += c;
        // Headers are read from the raw line; stripping removes letters.
        std::istringstream rawls(raw);
        std::string rawword;
        if (rawls >> rawword) {
            if (rawword == "points") {
                if (!(rawls >> d.points)) throw ParseError("bad points header");
                saw_points = true;
                continue;
            }
            if (rawword == "partial") {
                d.partial = true;
                continue;
            }
        }
        std::size_t pos = 0;
        while ((pos = line.find('(', pos)) != std::string::npos) {
            std::size_t close = line.find(')', pos);
            if (close == std::string::npos)
                throw ParseError("line " + std::to_string(line_no) + ": unclosed block");
            std::string body = line.substr(pos + 1, close - pos - 1);
            pos = close + 1;
            std::vector<int> head, tail;
            std::vector<int>* cur = &head;
            std::string num;
            auto flush = [&]() {
                if (num.empty()) return;
                cur->push_back(std::stoi(num));
                num.clear();
            };
            for (char c : body) {
                if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
                    num += c;
                } else if (c == ',') {
                    flush();
                } else if (c == ';') {
                    flush();
                    cur = &tail;
                }
            }
            flush();
            try {
                Block b = block_from_fields(head, tail, line_no);
                for (int x : b.vertices()) max_label = std::max(max_label, x);
                d.blocks.push_back(b);
            } catch (const MalformedBlock& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
    }
    if (!saw_points) d.points = max_label + 1;
    return d;
}

nlohmann::json triples_to_json(const TripleSystem& s) {
    nlohmann::json j;
    j["order"] = s.order;
    auto arr = nlohmann::json::array();
    for (const auto& t : s.triples) arr.push_back({t[0], t[1], t[2]});
    j["triples"] = std::move(arr);
    if (s.has_resolution()) j["resolution"] = s.resolution;
    return j;
}

TripleSystem triples_from_json(const nlohmann::json& j) {
    TripleSystem s;
    try {
        s.order = j.at("order").get<int>();
        for (const auto& t : j.at("triples")) {
            std::array<int, 3> a{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
            std::sort(a.begin(), a.end());
            s.triples.push_back(a);
        }
        if (j.contains("resolution"))
            s.resolution = j.at("resolution").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad triple-system JSON: ") + e.what());
    }
    return s;
}

std::string triples_to_text(const TripleSystem& s) {
    std::ostringstream os;
    os << "points " << s.order << "\n";
    for (const auto& t : s.triples)
        os << "(" << t[0] << "," << t[1] << "," << t[2] << ")\n";
    return os.str();
}

TripleSystem triples_from_text(std::string_view text) {
    Design d = design_from_text(text);
    TripleSystem s;
    s.order = d.points;
    for (const Block& b : d.blocks) {
        if (b.kind != BlockKind::triangle)
            throw ParseError("triple-system text may only contain triangles");
        std::array<int, 3> t{b.v[0], b.v[1], b.v[2]};
        std::sort(t.begin(), t.end());
        s.triples.push_back(t);
    }
    return s;
}

nlohmann::json certificate_to_json(const EmbeddingCertificate& c) {
    nlohmann::json j;
    j["n"] = c.sts.order;
    j["u"] = c.u;
    auto sts = nlohmann::json::array();
    for (const auto& t : c.sts.triples) sts.push_back({t[0], t[1], t[2]});
    j["sts"] = std::move(sts);
    j["design"] = design_to_json(c.design);
    j["map"] = c.sun_of_triple;
    return j;
}

EmbeddingCertificate certificate_from_json(const nlohmann::json& j) {
    EmbeddingCertificate c;
    try {
        c.sts.order = j.at("n").get<int>();
        for (const auto& t : j.at("sts")) {
            std::array<int, 3> a{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
            std::sort(a.begin(), a.end());
            c.sts.triples.push_back(a);
        }
        c.u = j.at("u").get<int>();
        c.design = design_from_json(j.at("design"));
        c.sun_of_triple = j.at("map").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad certificate JSON: ") + e.what());
    }
    return c;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ParseError("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& p, std::string_view data) {
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << data;
    }
    std::filesystem::rename(tmp, p);
}

}  // namespace sunweave
