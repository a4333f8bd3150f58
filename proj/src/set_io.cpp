#include "delone/set_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace delone {

using nlohmann::json;

namespace {

Rat rat_at(const json& node, const std::string& path) {
    if (!node.is_string())
        throw set_parse_error(path + ": expected a rational string like \"3/4\"");
    try {
        return parse_rat(node.get<std::string>());
    } catch (const std::exception& e) {
        throw set_parse_error(path + ": " + e.what());
    }
}

}  // namespace

PeriodicSet parse_set_json(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw set_parse_error(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw set_parse_error(origin + ": top level must be an object");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw set_parse_error(origin + ": missing integer field 'dimension'");
    const int d = doc["dimension"].get<int>();
    if (d < 1) throw set_parse_error(origin + ": dimension must be positive");

    if (!doc.contains("gram") || !doc["gram"].is_array() || doc["gram"].size() != static_cast<std::size_t>(d))
        throw set_parse_error(origin + ": 'gram' must be a " + std::to_string(d) + "x" +
                              std::to_string(d) + " array");
    RMat g(d, RVec(d));
    for (int i = 0; i < d; ++i) {
        const json& row = doc["gram"][i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
            throw set_parse_error(origin + ": gram[" + std::to_string(i) + "] has wrong length");
        for (int j = 0; j < d; ++j)
            g[i][j] = rat_at(row[j], origin + ": gram[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }

    if (!doc.contains("motif") || !doc["motif"].is_array() || doc["motif"].empty())
        throw set_parse_error(origin + ": 'motif' must be a nonempty array of points");
    std::vector<RVec> motif;
    for (std::size_t k = 0; k < doc["motif"].size(); ++k) {
        const json& pt = doc["motif"][k];
        if (!pt.is_array() || pt.size() != static_cast<std::size_t>(d))
            throw set_parse_error(origin + ": motif[" + std::to_string(k) + "] has wrong length");
        RVec p(d);
        for (int j = 0; j < d; ++j)
            p[j] = rat_at(pt[j], origin + ": motif[" + std::to_string(k) + "][" + std::to_string(j) + "]");
        motif.push_back(std::move(p));
    }

    std::optional<Rat> declared;
    if (doc.contains("declared_R_sq"))
        declared = rat_at(doc["declared_R_sq"], origin + ": declared_R_sq");

    try {
        return PeriodicSet(GramMatrix(std::move(g)), std::move(motif), declared);
    } catch (const std::exception& e) {
        throw set_parse_error(origin + ": " + e.what());
    }
}

PeriodicSet load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw set_parse_error(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_set_json(buf.str(), path);
}

std::string emit_set_json(const PeriodicSet& x, const std::string& name) {
    json doc;
    doc["dimension"] = x.dim();
    json gram = json::array();
    for (int i = 0; i < x.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < x.dim(); ++j) row.push_back(rat_str(x.gram.at(i, j)));
        gram.push_back(std::move(row));
    }
    doc["gram"] = std::move(gram);
    json motif = json::array();
    for (const RVec& p : x.motif) {
        json pt = json::array();
        for (const Rat& c : p) pt.push_back(rat_str(c));
        motif.push_back(std::move(pt));
    }
    doc["motif"] = std::move(motif);
    if (x.declared_R_sq) doc["declared_R_sq"] = rat_str(*x.declared_R_sq);
    if (!name.empty()) doc["name"] = name;
    return doc.dump(2) + "\n";
}

std::string set_digest(const PeriodicSet& x) {
    std::string canon = "d=" + std::to_string(x.dim()) + ";G=";
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) canon += rat_str(x.gram.at(i, j)) + ",";
    canon += ";M=";
    for (const RVec& p : x.motif) {
        for (const Rat& c : p) canon += rat_str(c) + ",";
        canon += ";";
    }
    canon += "R=" + (x.declared_R_sq ? rat_str(*x.declared_R_sq) : std::string("-"));

    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace delone
