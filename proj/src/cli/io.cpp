#include "wblocks/cli/io.hpp"

#include <charconv>
#include <sstream>

namespace wblocks::cli {

namespace {

int parse_int(const std::string& s, const std::string& what)
{
    int v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (s.empty() || ec != std::errc() || p != e)
        throw UsageError("bad integer '" + s + "' in " + what);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::vector<int> parse_list(const std::string& s, const std::string& what)
{
    std::vector<int> out;
    if (s.empty())
        return out;
    for (const std::string& p : split(s, ','))
        out.push_back(parse_int(p, what));
    return out;
}

Composition from_parts(int offset, const std::vector<int>& parts, const std::string& s)
{
    for (int p : parts)
        if (p < 0)
            throw UsageError("negative part in composition '" + s + "'");
    return Composition::from_dense(offset, parts);
}

} // namespace

Composition parse_composition(const std::string& s)
{
    if (s == "0" || s.empty())
        return Composition();
    if (s.rfind("offset=", 0) == 0) {
        auto fields = split(s, ';');
        if (fields.size() != 2 || fields[1].rfind("parts=", 0) != 0)
            throw UsageError("composition must look like offset=o;parts=p0,p1: '" + s + "'");
        int offset = parse_int(fields[0].substr(7), "composition offset");
        return from_parts(offset, parse_list(fields[1].substr(6), "composition parts"), s);
    }
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw UsageError("composition must look like o:p0,p1 or 0: '" + s + "'");
    int offset = parse_int(s.substr(0, colon), "composition offset");
    return from_parts(offset, parse_list(s.substr(colon + 1), "composition parts"), s);
}

BlockKey parse_block(const std::string& s)
{
    auto fields = split(s, ';');
    if (fields.size() != 3 || fields[0].rfind("mu=", 0) != 0 || fields[1].rfind("nu=", 0) != 0 ||
        fields[2].rfind("t=", 0) != 0)
        throw UsageError("block must look like mu=<comp>;nu=<comp>;t=<t>: '" + s + "'");
    Composition mu = parse_composition(fields[0].substr(3));
    Composition nu = parse_composition(fields[1].substr(3));
    int t = parse_int(fields[2].substr(2), "block atypicality");
    try {
        return BlockKey::make(mu, nu, t);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

Window parse_window(const std::string& s)
{
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw UsageError("window must look like lo..hi: '" + s + "'");
    Window w{parse_int(s.substr(0, dots), "window"), parse_int(s.substr(dots + 2), "window")};
    if (w.lo > w.hi)
        throw UsageError("empty window '" + s + "'");
    return w;
}

std::pair<std::vector<int>, std::vector<int>> parse_rows(const std::string& s)
{
    auto semi = s.find(';');
    if (semi == std::string::npos)
        throw UsageError("rows must look like a1,a2;b1,b2: '" + s + "'");
    return {parse_list(s.substr(0, semi), "top row"), parse_list(s.substr(semi + 1), "bottom row")};
}

Json to_json(const Composition& c)
{
    Json j;
    j["offset"] = c.offset();
    j["parts"] = c.dense();
    return j;
}

Json coeff_map(const Laurent& f)
{
    Json j = Json::object();
    for (const auto& [e, c] : f.terms())
        j[std::to_string(e)] = c.get_str();
    return j;
}

Json to_json(const Laurent& f)
{
    Json j;
    j["coeffs"] = coeff_map(f);
    return j;
}

Json to_json(const BlockKey& xi)
{
    Json j;
    j["mu"] = to_json(xi.mu);
    j["nu"] = to_json(xi.nu);
    j["t"] = xi.t;
    j["m"] = xi.m;
    j["n"] = xi.n;
    j["key"] = xi.to_string();
    return j;
}

Json to_json(const Tableau& a)
{
    Json j;
    j["m"] = a.pyramid().m();
    j["n"] = a.pyramid().n();
    j["s_minus"] = a.pyramid().s_minus();
    j["top"] = a.top();
    j["bottom"] = a.bottom();
    return j;
}

Json to_json(const MultiPoly& f)
{
    Json j = Json::array();
    for (const auto& [e, c] : f.terms())
        j.push_back(Json{{"exponents", e}, {"coeff", c.get_str()}});
    return j;
}

Json to_json(const CompChar& c)
{
    Json j = Json::array();
    for (const auto& [eta, v] : c)
        j.push_back(Json{{"composition", to_json(eta)}, {"coefficient", v.get_str()}});
    return j;
}

Json to_json(const WeightChar& c)
{
    Json terms = Json::array();
    for (const auto& [w, v] : c.terms)
        terms.push_back(Json{{"weight", w}, {"coefficient", v.get_str()}});
    return Json{{"depth", c.depth}, {"terms", terms}};
}

Json terms_json(const TensorVec& v)
{
    Json terms = Json::array();
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
        terms.push_back(Json{{"key", it->first}, {"coeff", coeff_map(it->second)}});
    return terms;
}

Json to_json(const TensorVec& v)
{
    Json j;
    j["N"] = v.N();
    j["signs"] = v.signs();
    j["terms"] = terms_json(v);
    return j;
}

Laurent laurent_from_json(const Json& j)
{
    const Json& m = j.contains("coeffs") ? j.at("coeffs") : j;
    if (!m.is_object())
        throw UsageError("Laurent polynomial must be an exponent -> coefficient object");
    Laurent f;
    for (const auto& [e, c] : m.items()) {
        std::string cs = c.is_string() ? c.get<std::string>() : c.dump();
        mpz_class z;
        if (z.set_str(cs, 10) != 0)
            throw UsageError("bad coefficient '" + cs + "'");
        f.add_term(parse_int(e, "exponent"), z);
    }
    return f;
}

} // namespace wblocks::cli
