#include "braces/json_io.hpp"

namespace braces {

namespace {

std::vector<std::vector<Elem>> table_from_json(const Json& j) {
    return j.get<std::vector<std::vector<Elem>>>();
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order();
    j["table"] = g.table();
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    FiniteGroup g(table_from_json(j.at("table")));
    if (j.contains("order") && j.at("order").get<int>() != g.order())
        throw GroupError("declared order does not match table size");
    return g;
}

Json brace_to_json(const SkewBrace& b) {
    Json j;
    j["order"] = b.order();
    j["add_table"] = b.add().table();
    j["mul_table"] = b.mul().table();
    if (!b.labels().empty()) j["labels"] = b.labels();
    return j;
}

SkewBrace brace_from_json(const Json& j) {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return SkewBrace(FiniteGroup(table_from_json(j.at("add_table"))),
                     FiniteGroup(table_from_json(j.at("mul_table"))), std::move(labels));
}

Json solution_to_json(const Solution& s) {
    Json j;
    j["n"] = s.n;
    j["lam"] = s.lam;
    j["rho"] = s.rho;
    return j;
}

Solution solution_from_json(const Json& j) {
    Solution s;
    s.n = j.at("n").get<int>();
    s.lam = table_from_json(j.at("lam"));
    s.rho = table_from_json(j.at("rho"));
    std::string err = validate_solution(s);
    if (!err.empty()) throw BraceError("invalid solution: " + err);
    return s;
}

Json verdict_to_json(const std::string& brace_id, const Verdict& v,
                     std::optional<int> left_class) {
    Json j;
    j["brace_id"] = brace_id;
    j["applicable"] = v.applicable();
    if (!v.applicable()) j["reason"] = v.reason;
    j["m"] = v.m;
    j["r"] = v.r;
    if (left_class)
        j["left_class"] = *left_class;
    else
        j["left_class"] = nullptr;
    if (v.right_class >= 0)
        j["right_class"] = v.right_class;
    else
        j["right_class"] = nullptr;
    j["bound"] = v.bound;
    j["pass"] = v.passed();
    return j;
}

Json series_report_to_json(const SeriesReport& r) {
    Json j;
    Json left = Json::array(), right = Json::array();
    for (const auto& s : r.left_chain) left.push_back(s);
    for (const auto& s : r.right_chain) right.push_back(s);
    j["left_chain"] = left;
    j["right_chain"] = right;
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = nullptr;
    };
    put("left_class", r.left_class);
    put("right_class", r.right_class);
    put("add_class_m", r.add_class_m);
    put("bsq_class_r", r.bsq_class_r);
    put("central_class", r.central_class);
    return j;
}

Json catalog_entry_to_json(const SkewBrace& b, const std::string& source,
                           const std::string& add_name, const std::string& mul_name) {
    Json j = brace_to_json(b);
    j["source"] = source;
    j["add_group"] = add_name;
    j["mul_group"] = mul_name;
    return j;
}

std::string group_class_name(const FiniteGroup& g) {
    for (const auto& [name, ref] : groups_up_to_order(8))
        if (ref.order() == g.order() && isomorphism(ref, g)) return name;
    return "order" + std::to_string(g.order());
}

}  // namespace braces
