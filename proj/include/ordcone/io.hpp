// Instance-file parsing/serialization and deterministic report emission.
//
// Instance files are UTF-8 JSON objects with a "kind" discriminator:
//   ineq_system:  {"kind":"ineq_system","dim":N,"ineqs":[{"a":[..],"b":".."},..]}
//                 each row encodes a . x <= b; parsing flips it to the
//                 internal representation b - a . x >= 0
//   vpolytope:    {"kind":"vpolytope","dim":N,"points":[[..],..]}
//   monoid:       {"kind":"monoid","dim":N,"gens":[[..],..]}         (integers)
//   presentation: {"kind":"presentation","num_gens":M,
//                  "equalities":[[..],..],"positives":[[..],..]}     (integers)
//   qcone:        {"kind":"qcone","dim":N,"cone":"generators","gens":[[..],..]}
//                 or {"kind":"qcone","dim":2,"cone":"strict_quadrant"}
// All scalars are exact fraction strings ("p" or "p/q"); dimensions are JSON
// integers. Serialization is canonical (2-space indent, key order as above),
// so emit -> parse -> emit is a fixed point.

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "monoid.hpp"
#include "ordgroup.hpp"
#include "polyhedra.hpp"
#include "rational.hpp"

namespace ordcone {

using ojson = nlohmann::ordered_json;

enum class InstanceKind { ineq_system, vpolytope, monoid, presentation, qcone };

inline std::string instance_kind_name(InstanceKind k) {
    switch (k) {
        case InstanceKind::ineq_system: return "ineq_system";
        case InstanceKind::vpolytope: return "vpolytope";
        case InstanceKind::monoid: return "monoid";
        case InstanceKind::presentation: return "presentation";
        case InstanceKind::qcone: return "qcone";
    }
    throw std::logic_error("instance_kind_name: bad kind");
}

struct Instance {
    InstanceKind kind = InstanceKind::ineq_system;
    std::optional<ConvexDomain> domain;
    std::optional<VPolytope> polytope;
    std::optional<FinGenMonoid> monoid;
    std::optional<GroupPresentation> presentation;
    std::optional<QSpaceCone> qcone;
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& field, const std::string& why) {
    throw std::runtime_error("parse error in field '" + field + "': " + why);
}

inline const ojson& require_field(const ojson& j, const std::string& field) {
    if (!j.is_object() || !j.contains(field)) parse_fail(field, "missing");
    return j.at(field);
}

inline std::size_t parse_dim_field(const ojson& j, const std::string& field) {
    const ojson& v = require_field(j, field);
    if (!v.is_number_unsigned()) parse_fail(field, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

inline Rational parse_scalar(const ojson& v, const std::string& field) {
    if (!v.is_string()) parse_fail(field, "expected a fraction string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
        parse_fail(field, e.what());
    }
}

inline QVector parse_qvec(const ojson& v, const std::string& field, std::size_t dim) {
    if (!v.is_array()) parse_fail(field, "expected an array");
    if (v.size() != dim) parse_fail(field, "dimension mismatch");
    QVector out;
    out.reserve(dim);
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_scalar(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

inline IntVector parse_ivec(const ojson& v, const std::string& field, std::size_t dim) {
    const QVector q = parse_qvec(v, field, dim);
    IntVector out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (rat_den(q[i]) != 1)
            parse_fail(field + "[" + std::to_string(i) + "]", "expected an integer");
        out[i] = rat_num(q[i]);
    }
    return out;
}

inline ojson json_vec(const QVector& v) {
    ojson a = ojson::array();
    for (const Rational& c : v) a.push_back(fraction_string(c));
    return a;
}

inline ojson json_vec(const IntVector& v) {
    ojson a = ojson::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(fraction_string(v[i]));
    return a;
}

template <typename V>
inline ojson json_vec_list(const std::vector<V>& vs) {
    ojson a = ojson::array();
    for (const V& v : vs) a.push_back(json_vec(v));
    return a;
}

}  // namespace detail

inline Instance parse_instance_text(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + e.what());
    }
    if (!j.is_object()) detail::parse_fail("kind", "instance must be a JSON object");
    const ojson& kindv = detail::require_field(j, "kind");
    if (!kindv.is_string()) detail::parse_fail("kind", "expected a string");
    const std::string kind = kindv.get<std::string>();

    Instance inst;
    if (kind == "ineq_system") {
        inst.kind = InstanceKind::ineq_system;
        const std::size_t dim = detail::parse_dim_field(j, "dim");
        const ojson& rows = detail::require_field(j, "ineqs");
        if (!rows.is_array()) detail::parse_fail("ineqs", "expected an array");
        std::vector<AffineFunctional> cs;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string field = "ineqs[" + std::to_string(i) + "]";
            const ojson& row = rows[i];
            if (!row.is_object() || !row.contains("a") || !row.contains("b"))
                detail::parse_fail(field, "expected an object with fields 'a' and 'b'");
            const QVector a = detail::parse_qvec(row.at("a"), field + ".a", dim);
            const Rational b = detail::parse_scalar(row.at("b"), field + ".b");
            AffineFunctional f;  // a . x <= b  becomes  b - a . x >= 0
            f.linear = q_scale(Rational(-1), a);
            f.constant = b;
            cs.push_back(std::move(f));
        }
        inst.domain = ConvexDomain(dim, std::move(cs));
        return inst;
    }
    if (kind == "vpolytope") {
        inst.kind = InstanceKind::vpolytope;
        const std::size_t dim = detail::parse_dim_field(j, "dim");
        const ojson& pts = detail::require_field(j, "points");
        if (!pts.is_array()) detail::parse_fail("points", "expected an array");
        std::vector<QVector> points;
        for (std::size_t i = 0; i < pts.size(); ++i)
            points.push_back(detail::parse_qvec(pts[i], "points[" + std::to_string(i) + "]", dim));
        inst.polytope = VPolytope(dim, std::move(points));
        return inst;
    }
    if (kind == "monoid") {
        inst.kind = InstanceKind::monoid;
        const std::size_t dim = detail::parse_dim_field(j, "dim");
        const ojson& gs = detail::require_field(j, "gens");
        if (!gs.is_array()) detail::parse_fail("gens", "expected an array");
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < gs.size(); ++i)
            gens.push_back(detail::parse_ivec(gs[i], "gens[" + std::to_string(i) + "]", dim));
        try {
            inst.monoid = FinGenMonoid(dim, std::move(gens));
        } catch (const std::exception& e) {
            detail::parse_fail("gens", e.what());
        }
        return inst;
    }
    if (kind == "presentation") {
        inst.kind = InstanceKind::presentation;
        const std::size_t m = detail::parse_dim_field(j, "num_gens");
        const ojson& eqs = detail::require_field(j, "equalities");
        const ojson& pos = detail::require_field(j, "positives");
        if (!eqs.is_array()) detail::parse_fail("equalities", "expected an array");
        if (!pos.is_array()) detail::parse_fail("positives", "expected an array");
        std::vector<IntVector> equalities, positives;
        for (std::size_t i = 0; i < eqs.size(); ++i)
            equalities.push_back(
                detail::parse_ivec(eqs[i], "equalities[" + std::to_string(i) + "]", m));
        for (std::size_t i = 0; i < pos.size(); ++i)
            positives.push_back(detail::parse_ivec(pos[i], "positives[" + std::to_string(i) + "]", m));
        inst.presentation = GroupPresentation(m, std::move(equalities), std::move(positives));
        return inst;
    }
    if (kind == "qcone") {
        inst.kind = InstanceKind::qcone;
        const std::size_t dim = detail::parse_dim_field(j, "dim");
        const ojson& conev = detail::require_field(j, "cone");
        if (!conev.is_string()) detail::parse_fail("cone", "expected a string");
        const std::string cone = conev.get<std::string>();
        if (cone == "strict_quadrant") {
            if (dim != 2) detail::parse_fail("dim", "strict_quadrant requires dim 2");
            inst.qcone = QSpaceCone::strict_quadrant();
            return inst;
        }
        if (cone != "generators") detail::parse_fail("cone", "unknown cone kind '" + cone + "'");
        const ojson& gs = detail::require_field(j, "gens");
        if (!gs.is_array()) detail::parse_fail("gens", "expected an array");
        std::vector<QVector> gens;
        for (std::size_t i = 0; i < gs.size(); ++i)
            gens.push_back(detail::parse_qvec(gs[i], "gens[" + std::to_string(i) + "]", dim));
        try {
            inst.qcone = QSpaceCone::from_generators(dim, std::move(gens));
        } catch (const std::exception& e) {
            detail::parse_fail("gens", e.what());
        }
        return inst;
    }
    detail::parse_fail("kind", "unknown kind '" + kind + "'");
}

inline Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance_text(buf.str());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline std::string serialize_instance(const Instance& inst) {
    ojson j;
    j["kind"] = instance_kind_name(inst.kind);
    switch (inst.kind) {
        case InstanceKind::ineq_system: {
            j["dim"] = inst.domain->dimension();
            ojson rows = ojson::array();
            for (const AffineFunctional& f : inst.domain->constraints()) {
                ojson row;  // internal c + l . x >= 0 maps back to (-l) . x <= c
                row["a"] = detail::json_vec(q_scale(Rational(-1), f.linear));
                row["b"] = fraction_string(f.constant);
                rows.push_back(std::move(row));
            }
            j["ineqs"] = std::move(rows);
            break;
        }
        case InstanceKind::vpolytope:
            j["dim"] = inst.polytope->dimension();
            j["points"] = detail::json_vec_list(inst.polytope->points());
            break;
        case InstanceKind::monoid:
            j["dim"] = inst.monoid->dimension();
            j["gens"] = detail::json_vec_list(inst.monoid->gens());
            break;
        case InstanceKind::presentation:
            j["num_gens"] = inst.presentation->num_gens();
            j["equalities"] = detail::json_vec_list(inst.presentation->equalities());
            j["positives"] = detail::json_vec_list(inst.presentation->positives());
            break;
        case InstanceKind::qcone:
            j["dim"] = inst.qcone->dimension();
            if (inst.qcone->kind() == QSpaceCone::Kind::strict_quadrant) {
                j["cone"] = "strict_quadrant";
            } else {
                j["cone"] = "generators";
                j["gens"] = detail::json_vec_list(inst.qcone->generators());
            }
            break;
    }
    return j.dump(2) + "\n";
}

// Preferred instance form of a catalog entry: the presentation when one
// exists, else the monoid, else the rational cone.
inline Instance instance_from_catalog(const CatalogInstance& c) {
    Instance inst;
    if (c.presentation) {
        inst.kind = InstanceKind::presentation;
        inst.presentation = c.presentation;
    } else if (c.monoid) {
        inst.kind = InstanceKind::monoid;
        inst.monoid = c.monoid;
    } else if (c.qcone) {
        inst.kind = InstanceKind::qcone;
        inst.qcone = c.qcone;
    } else {
        throw std::logic_error("instance_from_catalog: empty catalog entry");
    }
    return inst;
}

// --- reports -----------------------------------------------------------------

// A report is the command echo, the process exit status, and an ordered body
// whose values are strings, vectors (arrays of fraction strings), lists of
// vectors, or inequality rows {"a": [...], "b": "..."}; both emitters are
// deterministic functions of the report.
struct Report {
    std::string command;
    int exit_status = 0;
    ojson body = ojson::object();

    void set(const std::string& key, const std::string& value) { body[key] = value; }
    void set_vector(const std::string& key, const QVector& v) { body[key] = detail::json_vec(v); }
    void set_vector(const std::string& key, const IntVector& v) { body[key] = detail::json_vec(v); }
    template <typename V>
    void set_vectors(const std::string& key, const std::vector<V>& vs) {
        body[key] = detail::json_vec_list(vs);
    }
    void set_ineqs(const std::string& key, const std::vector<AffineFunctional>& cs) {
        ojson rows = ojson::array();
        for (const AffineFunctional& f : cs) {
            ojson row;
            row["a"] = detail::json_vec(q_scale(Rational(-1), f.linear));
            row["b"] = fraction_string(f.constant);
            rows.push_back(std::move(row));
        }
        body[key] = std::move(rows);
    }
};

namespace detail {

inline std::string render_tuple(const ojson& arr) {
    std::string s = "(";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) s += ", ";
        s += arr[i].get<std::string>();
    }
    s += ")";
    return s;
}

inline std::string render_ineq(const ojson& row) {
    return render_tuple(row.at("a")) + " . x <= " + row.at("b").get<std::string>();
}

}  // namespace detail

inline std::string emit_text(const Report& r) {
    if (r.body.empty()) return "OK\n";
    std::string out;
    for (const auto& item : r.body.items()) {
        const ojson& v = item.value();
        if (v.is_string()) {
            out += item.key() + ": " + v.get<std::string>() + "\n";
        } else if (v.is_array() && v.empty()) {
            out += item.key() + ": (none)\n";
        } else if (v.is_array() && v[0].is_string()) {
            out += item.key() + ": " + detail::render_tuple(v) + "\n";
        } else if (v.is_array() && v[0].is_object()) {
            out += item.key() + ":\n";
            for (const ojson& row : v) out += "  " + detail::render_ineq(row) + "\n";
        } else if (v.is_array()) {
            out += item.key() + ":\n";
            for (const ojson& row : v) out += "  " + detail::render_tuple(row) + "\n";
        } else {
            throw std::logic_error("emit_text: unsupported report value");
        }
    }
    return out;
}

inline std::string emit_json(const Report& r) {
    ojson j;
    j["command"] = r.command;
    j["exit"] = r.exit_status;
    for (const auto& item : r.body.items()) j[item.key()] = item.value();
    return j.dump(2) + "\n";
}

// --- CLI flag vector syntax ----------------------------------------------------
// Vectors are comma-separated fractions ("1,1/2"); vector lists separate
// vectors with semicolons ("1,0;0,1").

namespace detail {

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace detail

inline QVector parse_qvector_arg(const std::string& s) {
    QVector v;
    for (const std::string& part : detail::split_on(s, ',')) {
        if (part.empty()) throw std::runtime_error("malformed vector argument '" + s + "'");
        v.push_back(parse_rational(part));
    }
    return v;
}

inline IntVector parse_ivector_arg(const std::string& s) {
    const QVector q = parse_qvector_arg(s);
    IntVector v(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (rat_den(q[i]) != 1)
            throw std::runtime_error("malformed integer vector argument '" + s + "'");
        v[i] = rat_num(q[i]);
    }
    return v;
}

inline std::vector<QVector> parse_qvector_list_arg(const std::string& s) {
    std::vector<QVector> out;
    for (const std::string& part : detail::split_on(s, ';')) out.push_back(parse_qvector_arg(part));
    return out;
}

inline std::vector<IntVector> parse_ivector_list_arg(const std::string& s) {
    std::vector<IntVector> out;
    for (const std::string& part : detail::split_on(s, ';')) out.push_back(parse_ivector_arg(part));
    return out;
}

}  // namespace ordcone
