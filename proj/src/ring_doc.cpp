#include "c2ext/ring_doc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace c2ext {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

RingPtr RingDocument::make_ring_spec() const {
    return make_ring(variables);
}

std::vector<Polynomial> RingDocument::parse_generators(const RingPtr& ring) const {
    std::vector<Polynomial> gens;
    for (const std::string& text : generator_text) gens.push_back(parse_polynomial(ring, text));
    return gens;
}

RingDocument parse_ring_document(const std::string& text) {
    RingDocument doc;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool saw_vars = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw RingDocError("expected 'key = value'", lineno);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "vars" || key == "variables") {
            saw_vars = true;
            std::istringstream vs(value);
            std::string item;
            while (std::getline(vs, item, ',')) {
                item = trim(item);
                if (item.empty()) throw RingDocError("empty variable entry", lineno);
                std::size_t colon = item.find(':');
                RingSpec::Variable v;
                if (colon == std::string::npos) {
                    v.name = item;
                    v.weight = 1;
                } else {
                    v.name = trim(item.substr(0, colon));
                    std::string w = trim(item.substr(colon + 1));
                    try {
                        v.weight = std::stoi(w);
                    } catch (const std::exception&) {
                        throw RingDocError("bad weight '" + w + "'", lineno);
                    }
                }
                if (v.name.empty()) throw RingDocError("empty variable name", lineno);
                doc.variables.push_back(std::move(v));
            }
        } else if (key == "gen" || key == "generator") {
            doc.generator_text.push_back(value);
        } else if (key == "D" || key == "d") {
            try {
                doc.D = std::stoi(value);
            } catch (const std::exception&) {
                throw RingDocError("bad truncation degree '" + value + "'", lineno);
            }
        } else if (key == "P" || key == "p") {
            try {
                doc.P = std::stoi(value);
            } catch (const std::exception&) {
                throw RingDocError("bad homological bound '" + value + "'", lineno);
            }
        } else {
            throw RingDocError("unknown key '" + key + "'", lineno);
        }
    }
    if (!saw_vars) throw RingDocError("missing 'vars = ...' line", lineno);
    return doc;
}

RingDocument load_ring_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ring_document(buf.str());
}

std::string serialize_ring_document(const RingDocument& doc) {
    std::ostringstream out;
    out << "vars = ";
    for (std::size_t i = 0; i < doc.variables.size(); ++i) {
        if (i) out << ", ";
        out << doc.variables[i].name << ":" << doc.variables[i].weight;
    }
    out << "\n";
    for (const std::string& g : doc.generator_text) out << "gen = " << g << "\n";
    if (doc.D >= 0) out << "D = " << doc.D << "\n";
    if (doc.P >= 0) out << "P = " << doc.P << "\n";
    return out.str();
}

RingDocument to_ring_document(const C2Presentation& pres, int D, int P) {
    RingDocument doc;
    doc.variables = pres.ring->variables();
    for (const Polynomial& g : pres.generators)
        doc.generator_text.push_back(format_polynomial(g));
    doc.D = D;
    doc.P = P;
    return doc;
}

}  // namespace c2ext
