#ifndef CPERM_OUTPUT_HPP
#define CPERM_OUTPUT_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cperm/mpoly.hpp"
#include "cperm/perm.hpp"

namespace cperm {

// One emitted polynomial: which group, which derivation produced it, and
// its terms in canonical (u,v,w)-lex order.  Coefficients travel as decimal
// strings because they outgrow 64 bits quickly.
//
// JSON schema:
//   {"r":int,"s":int,"m":int,"n":int,"method":string,
//    "terms":[{"u":int,"v":int,"w":int,"c":"decimal-string"}]}
// CSV: header "u,v,w,c" followed by one term per row, same order.

struct OutputTerm {
    int u = 0;
    int v = 0;
    int w = 0;
    BigInt c;
    bool operator==(const OutputTerm&) const = default;
};

struct OutputRecord {
    GroupSpec spec;
    std::string method;
    std::vector<OutputTerm> terms;

    static OutputRecord from_poly(const GroupSpec& spec, std::string method,
                                  const MPoly& poly) {
        OutputRecord rec{spec, std::move(method), {}};
        for (const auto& [mono, coeff] : poly.terms())
            rec.terms.push_back({mono.u_exp, mono.v_exp, mono.w_exp, to_integer(coeff)});
        return rec;
    }

    MPoly to_poly() const {
        MPoly p;
        for (const auto& t : terms) p.add_term({t.u, t.v, t.w}, BigRat(t.c));
        return p;
    }

    bool operator==(const OutputRecord& o) const {
        return spec.r == o.spec.r && spec.s == o.spec.s && spec.n == o.spec.n &&
               spec.m == o.spec.m && method == o.method && terms == o.terms;
    }

    std::string to_text() const { return to_poly().to_string() + "\n"; }

    std::string to_json() const {
        nlohmann::ordered_json j;
        j["r"] = spec.r;
        j["s"] = spec.s;
        j["m"] = spec.m;
        j["n"] = spec.n;
        j["method"] = method;
        j["terms"] = nlohmann::ordered_json::array();
        for (const auto& t : terms)
            j["terms"].push_back({{"u", t.u}, {"v", t.v}, {"w", t.w}, {"c", t.c.str()}});
        return j.dump() + "\n";
    }

    static OutputRecord parse_json(const std::string& text) {
        nlohmann::json j = nlohmann::json::parse(text);
        OutputRecord rec{GroupSpec(j.at("r").get<int>(), j.at("s").get<int>(),
                                   j.at("n").get<int>(), j.at("m").get<int>()),
                         j.at("method").get<std::string>(),
                         {}};
        for (const auto& t : j.at("terms"))
            rec.terms.push_back({t.at("u").get<int>(), t.at("v").get<int>(),
                                 t.at("w").get<int>(),
                                 BigInt(t.at("c").get<std::string>())});
        return rec;
    }

    std::string to_csv() const {
        std::ostringstream os;
        os << "u,v,w,c\n";
        for (const auto& t : terms)
            os << t.u << ',' << t.v << ',' << t.w << ',' << t.c.str() << '\n';
        return os.str();
    }

    static std::vector<OutputTerm> parse_csv_terms(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        if (!std::getline(is, line) || line != "u,v,w,c")
            throw std::invalid_argument("parse_csv_terms: missing header");
        std::vector<OutputTerm> terms;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            OutputTerm t;
            std::string field;
            std::getline(ls, field, ',');
            t.u = std::stoi(field);
            std::getline(ls, field, ',');
            t.v = std::stoi(field);
            std::getline(ls, field, ',');
            t.w = std::stoi(field);
            std::getline(ls, field, ',');
            t.c = BigInt(field);
            terms.push_back(std::move(t));
        }
        return terms;
    }
};

} // namespace cperm

#endif
