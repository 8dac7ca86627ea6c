#include "hookschur/json_io.hpp"

#include <fstream>
#include <limits>

namespace hookschur {

namespace {

std::vector<int> int_array(const Json& j, const std::string& field) {
    if (!j.is_array()) throw std::invalid_argument("\"" + field + "\" must be an array");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw std::invalid_argument("\"" + field + "\" must hold integers, got " + e.dump());
        out.push_back(e.get<int>());
    }
    return out;
}

const Json& required(const Json& j, const std::string& field, const std::string& what) {
    if (!j.is_object()) throw std::invalid_argument(what + " must be a JSON object");
    auto it = j.find(field);
    if (it == j.end()) throw std::invalid_argument(what + " is missing \"" + field + "\"");
    return *it;
}

std::vector<SuperLetter> letter_array(const Json& j, const std::string& field) {
    if (!j.is_array()) throw std::invalid_argument("\"" + field + "\" must be an array");
    std::vector<SuperLetter> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw std::invalid_argument("\"" + field + "\" must hold letter strings, got " +
                                        e.dump());
        out.push_back(parse_letter(e.get<std::string>()));
    }
    return out;
}

}  // namespace

Json tableau_to_json(const Filling& f, const std::optional<SkewMask>& mask) {
    Json j = Json::object();
    j["shape"] = f.shape.parts;
    Json rows = Json::array();
    for (const auto& row : f.rows) {
        Json r = Json::array();
        for (const SuperLetter& a : row) r.push_back(to_string(a));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    if (mask) j["mask"] = mask->gamma.parts;
    return j;
}

ParsedTableau tableau_from_json(const Json& j) {
    ParsedTableau out;
    out.filling.shape = Composition(int_array(required(j, "shape", "tableau"), "shape"));
    const Json& rows = required(j, "rows", "tableau");
    if (!rows.is_array()) throw std::invalid_argument("\"rows\" must be an array");
    for (size_t i = 0; i < rows.size(); ++i)
        out.filling.rows.push_back(letter_array(rows[i], "rows"));
    if (j.contains("mask"))
        out.mask = SkewMask{WeakComposition(int_array(j.at("mask"), "mask"))};
    check_filling(out.filling, out.mask);
    return out;
}

Json matrix_to_json(const MixedMatrix& m) {
    Json j = Json::object();
    j["k1"] = m.k1;
    j["l1"] = m.l1;
    j["k2"] = m.k2;
    j["l2"] = m.l2;
    j["rows"] = m.entries;
    return j;
}

MixedMatrix matrix_from_json(const Json& j) {
    MixedMatrix m;
    auto dim = [&](const char* f) {
        const Json& v = required(j, f, "matrix");
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string("\"") + f + "\" must be an integer");
        return v.get<int>();
    };
    m.k1 = dim("k1");
    m.l1 = dim("l1");
    m.k2 = dim("k2");
    m.l2 = dim("l2");
    const Json& rows = required(j, "rows", "matrix");
    if (!rows.is_array()) throw std::invalid_argument("\"rows\" must be an array");
    for (const auto& row : rows) {
        if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
        std::vector<long long> r;
        for (const auto& e : row) {
            if (!e.is_number_integer())
                throw std::invalid_argument("matrix entries must be integers, got " + e.dump());
            r.push_back(e.get<long long>());
        }
        m.entries.push_back(std::move(r));
    }
    check_matrix(m);
    return m;
}

Json biword_to_json(const BiWord& w) {
    Json j = Json::object();
    Json top = Json::array(), bottom = Json::array();
    for (const SuperLetter& a : w.top) top.push_back(to_string(a));
    for (const SuperLetter& a : w.bottom) bottom.push_back(to_string(a));
    j["top"] = std::move(top);
    j["bottom"] = std::move(bottom);
    return j;
}

BiWord biword_from_json(const Json& j) {
    BiWord w;
    w.top = letter_array(required(j, "top", "biword"), "top");
    w.bottom = letter_array(required(j, "bottom", "biword"), "bottom");
    check_biword(w);
    return w;
}

Json lr_tableau_to_json(const LrTableau& v) {
    Json j = Json::object();
    j["beta"] = v.beta.parts;
    j["gamma"] = v.gamma.parts;
    j["labels"] = v.labels;
    return j;
}

LrTableau lr_tableau_from_json(const Json& j) {
    LrTableau v;
    v.beta = Composition(int_array(required(j, "beta", "labeled tableau"), "beta"));
    v.gamma = WeakComposition(int_array(required(j, "gamma", "labeled tableau"), "gamma"));
    const Json& labels = required(j, "labels", "labeled tableau");
    if (!labels.is_array()) throw std::invalid_argument("\"labels\" must be an array");
    for (const auto& row : labels) v.labels.push_back(int_array(row, "labels"));
    check_lr_structure(v);
    return v;
}

Json polynomial_to_json(const Polynomial& p) {
    Json j = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term = Json::object();
        if (c >= std::numeric_limits<long long>::min() &&
            c <= std::numeric_limits<long long>::max())
            term["coeff"] = c.convert_to<long long>();
        else
            term["coeff"] = c.str();
        Json exps = Json::object();
        for (const auto& [v, e] : m.exps)
            exps[std::string(1, family_char(v.family)) + std::to_string(v.index)] = e;
        term["exps"] = std::move(exps);
        j.push_back(std::move(term));
    }
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    Polynomial p;
    for (const auto& term : j) {
        const Json& cj = required(term, "coeff", "polynomial term");
        Coeff c;
        if (cj.is_number_integer())
            c = cj.get<long long>();
        else if (cj.is_string())
            c = Coeff(cj.get<std::string>());
        else
            throw std::invalid_argument("\"coeff\" must be an integer or decimal string");
        const Json& exps = required(term, "exps", "polynomial term");
        if (!exps.is_object()) throw std::invalid_argument("\"exps\" must be an object");
        Monomial m;
        for (const auto& [key, val] : exps.items()) {
            if (key.size() < 2)
                throw std::invalid_argument("bad variable name \"" + key + "\"");
            VarFamily f = parse_family(key[0]);
            int index = std::stoi(key.substr(1));
            if (!val.is_number_integer() || val.get<int>() < 1)
                throw std::invalid_argument("exponent of \"" + key + "\" must be positive");
            m = m.times(Monomial::var(f, index, val.get<int>()));
        }
        p.add_term(m, c);
    }
    return p;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace hookschur
