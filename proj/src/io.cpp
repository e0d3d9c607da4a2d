#include "csa/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace csa {

using nlohmann::json;

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

}  // namespace

Arrangement read_arrangement(std::istream& in) {
    std::string word;
    if (!(in >> word) || word != "dim")
        throw std::runtime_error("arrangement file: expected 'dim L' header");
    int dim = 0;
    if (!(in >> dim) || dim < 1) throw std::runtime_error("arrangement file: bad dimension");
    std::string rest;
    std::getline(in, rest);

    std::vector<std::vector<Int>> normals;
    std::vector<std::string> labels;
    bool any_label = false;
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string label;
        auto colon = line.find(':');
        std::string body = line;
        if (colon != std::string::npos) {
            label = line.substr(0, colon);
            body = line.substr(colon + 1);
            label.erase(0, label.find_first_not_of(" \t"));
            label.erase(label.find_last_not_of(" \t") + 1);
            any_label = true;
        }
        std::istringstream ls(body);
        std::vector<Int> v;
        std::string tok;
        while (ls >> tok) v.emplace_back(tok);
        if (v.empty()) continue;
        if (static_cast<int>(v.size()) != dim)
            throw std::runtime_error("arrangement file line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(dim) + " integers");
        normals.push_back(std::move(v));
        labels.push_back(label);
    }
    if (!any_label) labels.clear();
    return make_arrangement(dim, normals, labels);
}

Arrangement read_arrangement_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_arrangement(in);
}

void write_arrangement(std::ostream& out, const Arrangement& a) {
    out << "dim " << a.dim << "\n";
    for (int i = 0; i < a.size(); ++i) {
        out << a.label(i) << ":";
        for (int j = 0; j < a.dim; ++j) out << " " << a.hyperplanes[i].normal[j].get_str();
        out << "\n";
    }
}

Multiplicity read_multiplicity(std::istream& in, int expected_count) {
    Multiplicity mu;
    long v;
    while (in >> v) {
        if (v < 0) throw std::runtime_error("multiplicity file: negative entry");
        mu.push_back(v);
    }
    if (expected_count >= 0 && static_cast<int>(mu.size()) != expected_count)
        throw std::runtime_error("multiplicity file: expected " + std::to_string(expected_count) +
                                 " entries, got " + std::to_string(mu.size()));
    return mu;
}

Multiplicity read_multiplicity_file(const std::string& path, int expected_count) {
    auto in = open_or_throw(path);
    return read_multiplicity(in, expected_count);
}

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: expected 'n m' header");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw std::runtime_error("edge list: expected edge on line " + std::to_string(i + 2));
        edges.emplace_back(u, v);
    }
    return make_graph(n, std::move(edges));
}

Graph read_graph6_line(const std::string& line) {
    size_t pos = 0;
    if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= line.size()) throw std::runtime_error("graph6: empty line");
    int n;
    if (line[pos] == 126) throw std::runtime_error("graph6: graphs with n > 62 not supported");
    n = line[pos] - 63;
    ++pos;
    if (n < 1) throw std::runtime_error("graph6: bad vertex count");
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            size_t byte = pos + bit / 6;
            if (byte >= line.size()) throw std::runtime_error("graph6: truncated line");
            int val = line[byte] - 63;
            if (val < 0 || val > 63) throw std::runtime_error("graph6: bad character");
            if (val & (1 << (5 - bit % 6))) edges.emplace_back(u + 1, v + 1);
            ++bit;
        }
    }
    return make_graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    if (path.size() > 3 && path.substr(path.size() - 3) == ".g6") {
        auto in = open_or_throw(path);
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("graph6 file is empty: " + path);
        return read_graph6_line(line);
    }
    auto in = open_or_throw(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n << " " << g.edges.size() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

namespace {

Arrangement arrangement_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<std::vector<Int>> normals;
    std::vector<std::string> labels;
    for (const auto& h : j.at("hyperplanes")) {
        std::vector<Int> v;
        for (const auto& x : h.at("normal")) v.emplace_back(x.get<long>());
        normals.push_back(std::move(v));
        labels.push_back(h.value("label", ""));
    }
    return make_arrangement(dim, normals, labels);
}

std::vector<long> long_vector(const json& j) {
    std::vector<long> out;
    for (const auto& x : j) out.push_back(x.get<long>());
    return out;
}

}  // namespace

Certificate read_certificate(std::istream& in, const std::string& base_dir) {
    json j = json::parse(in);
    Certificate cert;
    const auto& arr = j.at("arrangement");
    if (arr.is_object() && arr.contains("file")) {
        std::string path = arr.at("file").get<std::string>();
        if (!base_dir.empty() && !path.empty() && path[0] != '/') path = base_dir + "/" + path;
        cert.arrangement = read_arrangement_file(path);
    } else {
        cert.arrangement = arrangement_from_json(arr);
    }
    for (const auto& s : j.at("steps")) {
        CertStep step;
        step.op = s.at("op").get<std::string>();
        step.hyperplane = s.at("hyperplane").get<std::string>();
        step.mult_before = long_vector(s.at("mult_before"));
        step.exponents = long_vector(s.at("exponents"));
        step.restriction_exponents = long_vector(s.at("restriction_exponents"));
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

Certificate read_certificate_file(const std::string& path) {
    auto in = open_or_throw(path);
    auto slash = path.find_last_of('/');
    std::string dir = (slash == std::string::npos) ? "." : path.substr(0, slash);
    return read_certificate(in, dir);
}

std::string certificate_to_json(const Certificate& cert) {
    json arr;
    arr["dim"] = cert.arrangement.dim;
    arr["hyperplanes"] = json::array();
    for (int i = 0; i < cert.arrangement.size(); ++i) {
        json h;
        h["label"] = cert.arrangement.label(i);
        json normal = json::array();
        for (const auto& x : cert.arrangement.hyperplanes[i].normal)
            normal.push_back(x.get_si());
        h["normal"] = normal;
        arr["hyperplanes"].push_back(h);
    }
    json steps = json::array();
    for (const auto& s : cert.steps) {
        json step;
        step["op"] = s.op;
        step["hyperplane"] = s.hyperplane;
        step["mult_before"] = s.mult_before;
        step["exponents"] = s.exponents;
        step["restriction_exponents"] = s.restriction_exponents;
        steps.push_back(step);
    }
    json j;
    j["arrangement"] = arr;
    j["steps"] = steps;
    return j.dump(2);
}

namespace {

Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

Poly poly_from_json(const json& j, int dim) {
    Poly p(dim);
    for (const auto& term : j) {
        Rat c = term.at("c").is_string() ? rat_from_string(term.at("c").get<std::string>())
                                         : Rat(term.at("c").get<long>());
        std::vector<int> e;
        for (const auto& x : term.at("e")) e.push_back(x.get<int>());
        if (static_cast<int>(e.size()) != dim)
            throw std::runtime_error("basis file: exponent arity mismatch");
        p.add_term(e, c);
    }
    return p;
}

}  // namespace

std::vector<PolyDerivation> read_basis(std::istream& in, int dim) {
    json j = json::parse(in);
    int d = j.value("dim", dim);
    if (dim >= 0 && d != dim) throw std::runtime_error("basis file: dimension mismatch");
    std::vector<PolyDerivation> out;
    for (const auto& der : j.at("derivations")) {
        PolyDerivation theta;
        for (const auto& coeff : der) theta.push_back(poly_from_json(coeff, d));
        out.push_back(std::move(theta));
    }
    return out;
}

std::vector<PolyDerivation> read_basis_file(const std::string& path, int dim) {
    auto in = open_or_throw(path);
    return read_basis(in, dim);
}

std::vector<std::vector<int>> read_filtration_file(const std::string& path, const Arrangement& a) {
    auto in = open_or_throw(path);
    std::vector<std::vector<int>> filt;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<int> level;
        std::string tok;
        while (ls >> tok) {
            int idx = a.index_of(tok);
            if (idx < 0) {
                try {
                    idx = std::stoi(tok);
                } catch (...) {
                    throw std::runtime_error("filtration file: unknown hyperplane '" + tok + "'");
                }
            }
            level.push_back(idx);
        }
        if (!level.empty()) filt.push_back(std::move(level));
    }
    return filt;
}

}  // namespace csa
