#include "wedge/json_io.hpp"

#include <set>

namespace wedge::io {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": rational must be a string like \"p/q\"");
    return Rational::parse(j.get<std::string>());
}

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": partition must be an array of integers");
    std::vector<int> parts;
    for (const auto& entry : j) {
        if (!entry.is_number_integer()) throw ParseError(where + ": partition entries must be integers");
        parts.push_back(entry.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json to_json(const FockVector& v) {
    json terms = json::array();
    for (const auto& [key, coeff] : v.terms())
        terms.push_back({{"charge", key.charge}, {"partition", to_json(key.shape)}, {"coeff", to_json(coeff)}});
    return {{"terms", terms}};
}

namespace {

template <class State, class KeyOf>
State state_from_json(const json& j, const char* sector_field, KeyOf key_of) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError(std::string("state must be an object with a \"terms\" array"));
    State out;
    std::set<std::pair<int, std::vector<int>>> seen;
    size_t idx = 0;
    for (const auto& term : j["terms"]) {
        std::string where = "terms[" + std::to_string(idx++) + "]";
        if (!term.is_object()) throw ParseError(where + ": term must be an object");
        if (!term.contains(sector_field) || !term[sector_field].is_number_integer())
            throw ParseError(where + ": missing integer \"" + sector_field + "\"");
        if (!term.contains("partition")) throw ParseError(where + ": missing \"partition\"");
        if (!term.contains("coeff")) throw ParseError(where + ": missing \"coeff\"");
        int sector = term[sector_field].get<int>();
        Partition shape = partition_from_json(term["partition"], where);
        Rational coeff = rational_from_json(term["coeff"], where);
        if (!seen.emplace(sector, shape.parts()).second)
            throw ParseError(where + ": duplicate basis key");
        out.add(key_of(sector, std::move(shape)), coeff);
    }
    return out;
}

} // namespace

FockVector fock_from_json(const json& j) {
    return state_from_json<FockVector>(
        j, "charge", [](int sector, Partition shape) { return FockIndex{sector, std::move(shape)}; });
}

json to_json(const BosonState& w) {
    json terms = json::array();
    for (const auto& [key, coeff] : w.terms())
        terms.push_back({{"zexp", key.zexp}, {"partition", to_json(key.shape)}, {"coeff", to_json(coeff)}});
    return {{"terms", terms}};
}

BosonState boson_from_json(const json& j) {
    return state_from_json<BosonState>(
        j, "zexp", [](int sector, Partition shape) { return BosonIndex{sector, std::move(shape)}; });
}

json to_json(const MayaDiagram& m) {
    return {{"charge", m.charge()}, {"partition", to_json(m.shape())}};
}

MayaDiagram maya_from_json(const json& j) {
    if (!j.is_object() || !j.contains("charge") || !j["charge"].is_number_integer())
        throw ParseError("maya diagram needs an integer \"charge\"");
    if (!j.contains("partition")) throw ParseError("maya diagram needs a \"partition\"");
    return MayaDiagram(j["charge"].get<int>(), partition_from_json(j["partition"], "partition"));
}

json to_json(const BandMatrix& m) {
    json finite = json::array();
    for (const auto& [key, coeff] : m.finite())
        finite.push_back({key.first, key.second, to_json(coeff)});
    json out = {{"finite", finite}};
    if (m.periodic()) {
        json entries = json::array();
        for (const auto& [key, coeff] : m.periodic()->entries)
            entries.push_back({key.shift, key.i, key.j, to_json(coeff)});
        out["periodic"] = {{"N", m.periodic()->period}, {"entries", entries}};
    }
    return out;
}

BandMatrix band_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("band matrix must be an object");
    BandMatrix out;
    if (j.contains("finite")) {
        if (!j["finite"].is_array()) throw ParseError("\"finite\" must be an array");
        size_t idx = 0;
        for (const auto& entry : j["finite"]) {
            std::string where = "finite[" + std::to_string(idx++) + "]";
            if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
                !entry[1].is_number_integer())
                throw ParseError(where + ": expected [row, col, \"coeff\"]");
            out.add_finite(entry[0].get<int>(), entry[1].get<int>(),
                           rational_from_json(entry[2], where));
        }
    }
    if (j.contains("periodic")) {
        const json& p = j["periodic"];
        if (!p.is_object() || !p.contains("N") || !p["N"].is_number_integer() ||
            !p.contains("entries") || !p["entries"].is_array())
            throw ParseError("\"periodic\" must be {\"N\": n, \"entries\": [...]}");
        int period = p["N"].get<int>();
        if (period < 1) throw ParseError("periodic period must be positive");
        size_t idx = 0;
        for (const auto& entry : p["entries"]) {
            std::string where = "periodic.entries[" + std::to_string(idx++) + "]";
            if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_integer() ||
                !entry[1].is_number_integer() || !entry[2].is_number_integer())
                throw ParseError(where + ": expected [shift, i, j, \"coeff\"]");
            try {
                out.add_periodic(period, entry[0].get<int>(), entry[1].get<int>(),
                                 entry[2].get<int>(), rational_from_json(entry[3], where));
            } catch (const DomainError& e) {
                throw ParseError(where + ": " + e.what());
            }
        }
    }
    return out;
}

json to_json(const GlElement& x) {
    json out = to_json(x.matrix);
    out["central"] = to_json(x.central);
    return out;
}

GlElement element_from_json(const json& j) {
    GlElement out;
    out.matrix = band_from_json(j);
    if (j.contains("central")) out.central = rational_from_json(j["central"], "central");
    return out;
}

json to_json(const LoopElement& x) {
    json terms = json::array();
    for (const auto& [power, mat] : x.terms) {
        json rows = json::array();
        for (int r = 0; r < mat.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < mat.cols(); ++c) row.push_back(to_json(mat.at(r, c)));
            rows.push_back(row);
        }
        terms.push_back({{"power", power}, {"matrix", rows}});
    }
    return {{"n", x.n}, {"terms", terms}};
}

LoopElement loop_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("terms") ||
        !j["terms"].is_array())
        throw ParseError("loop element must be {\"n\": N, \"terms\": [...]}");
    LoopElement out;
    out.n = j["n"].get<int>();
    if (out.n < 1) throw ParseError("loop element size must be positive");
    size_t idx = 0;
    for (const auto& term : j["terms"]) {
        std::string where = "terms[" + std::to_string(idx++) + "]";
        if (!term.is_object() || !term.contains("power") || !term["power"].is_number_integer() ||
            !term.contains("matrix") || !term["matrix"].is_array())
            throw ParseError(where + ": expected {\"power\": m, \"matrix\": [[..]]}");
        const json& rows = term["matrix"];
        if (static_cast<int>(rows.size()) != out.n)
            throw ParseError(where + ": matrix must be " + std::to_string(out.n) + "x" +
                             std::to_string(out.n));
        RationalMatrix mat(out.n, out.n);
        for (int r = 0; r < out.n; ++r) {
            if (!rows[static_cast<size_t>(r)].is_array() ||
                static_cast<int>(rows[static_cast<size_t>(r)].size()) != out.n)
                throw ParseError(where + ": matrix must be " + std::to_string(out.n) + "x" +
                                 std::to_string(out.n));
            for (int c = 0; c < out.n; ++c)
                mat.at(r, c) = rational_from_json(rows[static_cast<size_t>(r)][static_cast<size_t>(c)],
                                                  where);
        }
        out.add(term["power"].get<int>(), mat);
    }
    return out;
}

json to_json(const EquivarianceReport& r) {
    return {{"element", r.element},
            {"input", to_json(r.input)},
            {"fermionic_then_sigma", to_json(r.fermionic_then_sigma)},
            {"sigma_then_bosonic", to_json(r.sigma_then_bosonic)},
            {"equal", r.equal}};
}

} // namespace wedge::io
