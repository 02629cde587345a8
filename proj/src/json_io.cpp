#include "znz/json_io.hpp"

#include <fstream>

namespace znz {

json int_to_json(const Int& v) {
    if (fits_json_number(v)) return json(v.get_si());
    return json(to_string(v));
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
        return Int(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::invalid_argument&) {
            throw UsageError("not a decimal integer string: \"" + s + "\"");
        }
    }
    throw UsageError("expected an integer (number or decimal string), got " + j.dump());
}

json vector_to_json(const IntVector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(int_to_json(v[i]));
    return arr;
}

IntVector vector_from_json(const json& j) {
    if (!j.is_array()) throw UsageError("expected a JSON array for a vector");
    IntVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = int_from_json(j[i]);
    return v;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw UsageError("expected a nonempty JSON array of arrays");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw UsageError("expected a JSON array of arrays");
    const std::size_t cols = j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw UsageError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
    }
    return m;
}

json element_to_json(const GroupElement& e) {
    return json{{"w", vector_to_json(e.w)}, {"k", int_to_json(e.k)}};
}

GroupElement element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("w") || !j.contains("k")) {
        throw UsageError("expected {\"w\": [...], \"k\": ...}");
    }
    return GroupElement{vector_from_json(j.at("w")), int_from_json(j.at("k"))};
}

json outcome_to_json(const ConjugacyOutcome& o) {
    if (!o.conjugate()) return json{{"conjugate", false}};
    return json{{"conjugate", true}, {"witness", element_to_json(*o.witness)}};
}

json orbit_outcome_to_json(const OrbitOutcome& o) {
    if (!o.found()) return json{{"exponent", nullptr}};
    return json{{"exponent", int_to_json(*o.exponent)}};
}

json trace_to_json(const OrbitCertificateTrace& t) {
    json j{{"case_tag", t.case_tag}, {"krylov_dim", t.krylov_dim}};
    if (t.residue_poly) {
        json coeffs = json::array();
        for (const Rat& c : t.residue_poly->coeffs()) {
            coeffs.push_back(c.get_den() == 1 ? to_string(c.get_num())
                                              : to_string(c.get_num()) + "/" + to_string(c.get_den()));
        }
        j["residue_poly"] = std::move(coeffs);
    } else {
        j["residue_poly"] = nullptr;
    }
    json cand = json::array();
    for (const Int& e : t.candidates) cand.push_back(int_to_json(e));
    j["candidates"] = std::move(cand);
    return j;
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UsageError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

AbcGroup load_group_file(const std::string& path) {
    json j = parse_file(path);
    if (!j.is_object() || !j.contains("n") || !j.contains("phi")) {
        throw UsageError("group file must be {\"n\": ..., \"phi\": [[...]]}");
    }
    Int n = int_from_json(j.at("n"));
    if (n < 1 || !n.fits_sint_p()) throw UsageError("group dimension must be a small positive integer");
    return make_group(static_cast<std::size_t>(n.get_si()), matrix_from_json(j.at("phi")));
}

IntMatrix load_matrix_file(const std::string& path) {
    json j = parse_file(path);
    if (j.is_object() && j.contains("phi")) return matrix_from_json(j.at("phi"));
    return matrix_from_json(j);
}

}  // namespace znz
