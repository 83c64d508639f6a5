#include "minterp/problem_io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "minterp/parser.hpp"

namespace minterp {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty())
        throw Error(what + " must be a nonempty array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string())
            throw Error(what + " must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

MonomialOrder parse_order(const json& j, const std::vector<std::string>& variables) {
    OrderKind kind = OrderKind::grlex;
    std::vector<std::size_t> precedence;
    for (std::size_t i = 0; i < variables.size(); ++i) precedence.push_back(i);

    if (j.contains("kind"))
        kind = order_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("precedence")) {
        std::vector<std::string> names = string_list(j.at("precedence"), "order.precedence");
        if (names.size() != variables.size())
            throw Error("order.precedence must list every variable exactly once");
        precedence.clear();
        for (const std::string& name : names) {
            auto it = std::find(variables.begin(), variables.end(), name);
            if (it == variables.end())
                throw Error("order.precedence names unknown variable '" + name + "'");
            precedence.push_back(static_cast<std::size_t>(it - variables.begin()));
        }
    }
    return MonomialOrder(kind, std::move(precedence));
}

std::vector<Rational> rational_list(const json& j, const std::string& what) {
    std::vector<Rational> out;
    for (const std::string& s : string_list(j, what))
        out.push_back(Rational::parse(s));
    return out;
}

}  // namespace

ProblemFile load_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw Error("problem file must be a JSON object");
    if (!doc.contains("variables") || !doc.contains("sites"))
        throw Error("problem file needs 'variables' and 'sites' keys");

    std::vector<std::string> variables = string_list(doc.at("variables"), "variables");
    for (std::size_t i = 0; i < variables.size(); ++i)
        for (std::size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                throw Error("duplicate variable name '" + variables[i] + "'");

    MonomialOrder order = parse_order(doc.contains("order") ? doc.at("order") : json::object(),
                                      variables);

    if (!doc.at("sites").is_array() || doc.at("sites").empty())
        throw Error("'sites' must be a nonempty array");
    std::vector<Site> sites;
    for (const auto& sj : doc.at("sites")) {
        if (!sj.is_object() || !sj.contains("point") || !sj.contains("conditions"))
            throw Error("each site needs 'point' and 'conditions'");
        Site site;
        site.point = rational_list(sj.at("point"), "site.point");
        if (site.point.size() != variables.size())
            throw Error("site point length must equal the variable count");
        for (const std::string& expr : string_list(sj.at("conditions"), "site.conditions")) {
            Polynomial p = parse_polynomial(expr, variables);
            if (p.is_zero())
                throw Error("condition '" + expr + "' is the zero polynomial");
            site.conditions.push_back(std::move(p));
        }
        sites.push_back(std::move(site));
    }

    ProblemFile file{Problem(std::move(variables), std::move(order), std::move(sites)),
                     std::nullopt};

    if (doc.contains("values")) {
        std::vector<Rational> values = rational_list(doc.at("values"), "values");
        if (values.size() != file.problem.condition_count())
            throw Error("'values' length must equal the total condition count");
        file.values = std::move(values);
    }
    return file;
}

ProblemFile load_problem(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_problem_text(buffer.str());
}

std::string problem_to_json(const ProblemFile& file) {
    const Problem& problem = file.problem;
    json doc;
    doc["variables"] = problem.variables();
    json order;
    order["kind"] = to_string(problem.order().kind());
    json precedence = json::array();
    for (std::size_t v : problem.order().precedence())
        precedence.push_back(problem.variables()[v]);
    order["precedence"] = precedence;
    doc["order"] = order;

    json sites = json::array();
    for (const Site& site : problem.sites()) {
        json sj;
        json point = json::array();
        for (const Rational& c : site.point) point.push_back(c.str());
        sj["point"] = point;
        json conditions = json::array();
        for (const Polynomial& p : site.conditions)
            conditions.push_back(format_polynomial(p, problem.variables(), problem.order()));
        sj["conditions"] = conditions;
        sites.push_back(sj);
    }
    doc["sites"] = sites;

    if (file.values) {
        json values = json::array();
        for (const Rational& v : *file.values) values.push_back(v.str());
        doc["values"] = values;
    }
    return doc.dump(2) + "\n";
}

}  // namespace minterp
