#include "asmg/mask.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace asmg {

std::string family_name(MaskFamily f) {
    switch (f) {
        case MaskFamily::DD1D: return "dd";
        case MaskFamily::AnisoInterp: return "interp";
        case MaskFamily::MinimalInterp: return "minimal";
        case MaskFamily::BoxSpline: return "box";
        case MaskFamily::Approx: return "approx";
        case MaskFamily::External: return "external";
    }
    return "external";
}

static MaskFamily family_from_name(const std::string& s) {
    if (s == "dd") return MaskFamily::DD1D;
    if (s == "interp") return MaskFamily::AnisoInterp;
    if (s == "minimal") return MaskFamily::MinimalInterp;
    if (s == "box") return MaskFamily::BoxSpline;
    if (s == "approx") return MaskFamily::Approx;
    return MaskFamily::External;
}

std::string mask_to_csv(const Mask& m) {
    Exp lo, hi;
    m.symbol.support_box(lo, hi);
    std::ostringstream os;
    if (m.symbol.is_zero()) return "0\n";
    for (std::int64_t a1 = lo[0]; a1 <= hi[0]; ++a1) {
        for (std::int64_t a2 = lo[1]; a2 <= hi[1]; ++a2) {
            if (a2 != lo[1]) os << ",";
            os << m.symbol.coeff({a1, a2}).str();
        }
        os << "\n";
    }
    return os.str();
}

std::string mask_to_json(const Mask& m) {
    nlohmann::json j;
    j["family"] = family_name(m.family);
    j["name"] = m.name;
    j["dilation"] = {m.dilation.m1, m.dilation.m2};
    j["n"] = m.n;
    j["ell"] = m.ell;
    j["arity"] = m.symbol.arity();
    j["nnz"] = m.nnz();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : m.symbol.terms()) {
        terms.push_back({{"exp", {e[0], e[1]}}, {"num", c.num_str()}, {"den", c.den_str()}});
    }
    j["terms"] = std::move(terms);
    return j.dump(2);
}

Mask mask_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Mask m;
    m.family = family_from_name(j.value("family", "external"));
    m.name = j.value("name", "mask");
    if (j.contains("dilation")) {
        m.dilation.m1 = j["dilation"][0].get<long>();
        m.dilation.m2 = j["dilation"][1].get<long>();
    }
    m.n = j.value("n", 0);
    m.ell = j.value("ell", 0);
    int arity = j.value("arity", 2);
    LaurentPoly p(arity);
    for (const auto& t : j.at("terms")) {
        Exp e{t.at("exp")[0].get<std::int64_t>(), t.at("exp")[1].get<std::int64_t>()};
        Rational c = Rational::parse(t.at("num").get<std::string>() + "/" +
                                     t.at("den").get<std::string>());
        p.add_term(e, c);
    }
    m.symbol = std::move(p);
    return m;
}

LaurentPoly poly_from_matrix_text(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        for (auto& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string cell;
        while (ls >> cell) row.push_back(Rational::parse(cell));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) return LaurentPoly(2);
    const std::size_t nr = rows.size(), nc = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != nc) throw std::invalid_argument("matrix text: ragged rows");
    if (nr % 2 == 0 || nc % 2 == 0)
        throw std::invalid_argument("matrix text: dimensions must be odd to center");
    LaurentPoly p(2);
    const std::int64_t c1 = static_cast<std::int64_t>(nr) / 2;
    const std::int64_t c2 = static_cast<std::int64_t>(nc) / 2;
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            p.add_term({static_cast<std::int64_t>(i) - c1, static_cast<std::int64_t>(j) - c2},
                       rows[i][j]);
    return p;
}

}  // namespace asmg
