#include "qspec/document.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qspec/errors.hpp"

namespace qspec {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw ParseError("field \"" + field + "\": " + why);
}

int require_index(const ordered_json& v, int n, const std::string& field) {
    if (!v.is_number_integer()) bad_field(field, "expected an integer");
    const long long x = v.get<long long>();
    if (x < 0 || x >= n)
        bad_field(field, "index " + std::to_string(x) + " outside 0.." +
                             std::to_string(n - 1));
    return static_cast<int>(x);
}

/// True when `leq` is a full n x n matrix of 0/1 entries. A pair list whose
/// shape also matches is read as a matrix; documents that mean pairs should
/// keep the list shorter or longer than n rows.
bool looks_like_matrix(const ordered_json& leq, int n) {
    if (!leq.is_array() || static_cast<int>(leq.size()) != n) return false;
    for (const auto& row : leq) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) return false;
        for (const auto& cell : row)
            if (!cell.is_number_integer() ||
                (cell.get<long long>() != 0 && cell.get<long long>() != 1))
                return false;
    }
    return true;
}

}  // namespace

QuantaleDocument parse_document(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");

    std::string name = doc.value("name", std::string{});
    std::string note = doc.value("note", std::string{});

    if (!doc.contains("elements")) bad_field("elements", "missing");
    const auto& elems = doc["elements"];
    if (!elems.is_array() || elems.empty())
        bad_field("elements", "expected a non-empty array of labels");
    const int n = static_cast<int>(elems.size());
    if (n > kMaxElements) bad_field("elements", "more than " + std::to_string(kMaxElements));

    std::vector<std::string> labels;
    labels.reserve(n);
    std::set<std::string> distinct;
    for (const auto& e : elems) {
        if (!e.is_string()) bad_field("elements", "labels must be strings");
        labels.push_back(e.get<std::string>());
        if (!distinct.insert(labels.back()).second)
            bad_field("elements", "duplicate label \"" + labels.back() + "\"");
    }

    if (!doc.contains("leq")) bad_field("leq", "missing");
    const auto& leq = doc["leq"];
    std::vector<ElemSet> up(n, ElemSet(n));
    if (looks_like_matrix(leq, n)) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (leq[a][b].get<long long>() == 1) up[a].set(b);
    } else if (leq.is_array()) {
        for (int a = 0; a < n; ++a) up[a].set(a);
        for (const auto& pair : leq) {
            if (!pair.is_array() || pair.size() != 2)
                bad_field("leq", "each entry must be a pair [a, b]");
            const int a = require_index(pair[0], n, "leq");
            const int b = require_index(pair[1], n, "leq");
            up[a].set(b);
        }
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                if (up[a].test(k)) up[a] |= up[k];
    } else {
        bad_field("leq", "expected a pair list or a full 0/1 matrix");
    }

    if (!doc.contains("mul")) bad_field("mul", "missing");
    const auto& mul_rows = doc["mul"];
    if (!mul_rows.is_array() || static_cast<int>(mul_rows.size()) != n)
        bad_field("mul", "expected " + std::to_string(n) + " rows");
    std::vector<std::uint16_t> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a) {
        const auto& row = mul_rows[a];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            bad_field("mul", "row " + std::to_string(a) + " must have " +
                                 std::to_string(n) + " entries");
        for (int b = 0; b < n; ++b)
            mul[std::size_t(a) * n + b] =
                static_cast<std::uint16_t>(require_index(row[b], n, "mul"));
    }

    Quantale q(Lattice::from_order(std::move(up), std::move(labels)),
               std::move(mul));
    validate_quantale(q);
    return QuantaleDocument{std::move(name), std::move(note), std::move(q)};
}

QuantaleDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string serialize_document(const QuantaleDocument& doc) {
    const Quantale& q = doc.q;
    const int n = q.size();

    ordered_json out;
    out["name"] = doc.name;
    out["elements"] = ordered_json::array();
    for (Elem a = 0; a < n; ++a) out["elements"].push_back(q.label(a));

    ordered_json leq = ordered_json::array();
    for (Elem a = 0; a < n; ++a) {
        ordered_json row = ordered_json::array();
        for (Elem b = 0; b < n; ++b) row.push_back(q.leq(a, b) ? 1 : 0);
        leq.push_back(std::move(row));
    }
    out["leq"] = std::move(leq);

    ordered_json mul = ordered_json::array();
    for (Elem a = 0; a < n; ++a) {
        ordered_json row = ordered_json::array();
        for (Elem b = 0; b < n; ++b) row.push_back(q.mul(a, b));
        mul.push_back(std::move(row));
    }
    out["mul"] = std::move(mul);
    if (!doc.note.empty()) out["note"] = doc.note;

    return out.dump(2) + "\n";
}

}  // namespace qspec
