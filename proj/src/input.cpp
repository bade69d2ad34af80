#include "enbc/input.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace enbc {

namespace {

std::string entry_to_string(const nlohmann::json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<long long>());
    fail(Errc::BadEntry, "matrix entries must be strings or integers");
}

} // namespace

ArrangementInput parse_input(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::MalformedJson, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(Errc::MalformedJson, "arrangement file must hold a JSON object");

    ArrangementInput in;
    in.name = j.value("name", std::string("arrangement"));

    if (!j.contains("field")) {
        in.field = ScalarField::rationals();
    } else if (j["field"].is_string()) {
        if (j["field"] != "Q") fail(Errc::BadEntry, "field must be \"Q\" or {\"p\": prime}");
        in.field = ScalarField::rationals();
    } else if (j["field"].is_object() && j["field"].contains("p")) {
        in.field = ScalarField::prime(j["field"]["p"].get<long long>());
    } else {
        fail(Errc::BadEntry, "field must be \"Q\" or {\"p\": prime}");
    }

    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].empty())
        fail(Errc::BadEntry, "missing or empty matrix");
    size_t width = 0;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array()) fail(Errc::BadEntry, "matrix rows must be arrays");
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(entry_to_string(e));
        if (width == 0)
            width = r.size();
        else if (r.size() != width)
            fail(Errc::BadEntry, "matrix rows have unequal lengths");
        in.rows.push_back(std::move(r));
    }
    if (width == 0) fail(Errc::BadEntry, "matrix has empty rows");
    for (const auto& row : in.rows)
        for (const auto& e : row) parse_rational(e); // validate syntax eagerly

    if (j.contains("order")) {
        if (!j["order"].is_array()) fail(Errc::BadEntry, "order must be an array");
        std::vector<int> order;
        for (const auto& e : j["order"]) order.push_back(e.get<int>());
        OrderSpec::from_permutation(order); // validates
        if (order.size() != width) fail(Errc::BadEntry, "order length must equal column count");
        in.order = std::move(order);
    }
    return in;
}

ArrangementInput load_input_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Errc::BadEntry, "cannot open input file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_input(ss.str());
}

} // namespace enbc
