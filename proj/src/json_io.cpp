#include "mincode/json_io.hpp"

#include <sstream>

namespace mincode::json_io {

namespace {

json bigint_to_json(const construction::BigInt& v) {
    // Numbers past 2^53 go out as decimal strings so nothing rounds.
    if (v >= 0 && v <= construction::BigInt(std::uint64_t(1) << 53))
        return json(v.convert_to<std::uint64_t>());
    return json(v.str());
}

template <typename T>
T require(const json& j, const char* key) {
    if (!j.contains(key)) throw FormatError(std::string("missing field: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad field ") + key + ": " + e.what());
    }
}

}  // namespace

json descriptor_to_json(const construction::CodeDescriptor& d) {
    json j;
    j["p"] = d.p;
    j["h"] = d.h;
    if (!d.irreducible.empty()) j["irreducible"] = d.irreducible;
    j["m"] = d.m;
    j["k"] = d.k;
    j["alpha"] = d.alpha;
    return j;
}

construction::CodeDescriptor descriptor_from_json(const json& j) {
    construction::CodeDescriptor d;
    d.p = require<std::uint32_t>(j, "p");
    d.h = j.value("h", 1u);
    d.m = require<std::uint32_t>(j, "m");
    d.k = require<std::uint32_t>(j, "k");
    if (j.contains("alpha")) d.alpha = j.at("alpha").get<std::vector<gf::Elem>>();
    if (j.contains("irreducible"))
        d.irreducible = j.at("irreducible").get<std::vector<gf::Elem>>();
    return d;
}

json generator_to_json(const code_core::LinearCode& c) {
    json j;
    j["p"] = c.ctx.p();
    j["h"] = c.ctx.h();
    if (!c.ctx.irreducible().empty()) j["irreducible"] = c.ctx.irreducible();
    json rows = json::array();
    for (std::uint32_t r = 0; r < c.G.rows; ++r) rows.push_back(c.G.row(r));
    j["matrix"] = rows;
    return j;
}

code_core::LinearCode generator_from_json(const json& j) {
    std::uint32_t p = require<std::uint32_t>(j, "p");
    std::uint32_t h = j.value("h", 1u);
    gf::FieldContext ctx =
        j.contains("irreducible")
            ? gf::FieldContext::make(p, h, j.at("irreducible").get<std::vector<gf::Elem>>())
            : gf::FieldContext::make(p, h);
    auto rows = require<std::vector<std::vector<gf::Elem>>>(j, "matrix");
    if (rows.empty()) throw FormatError("matrix has no rows");
    linalg::Matrix G(std::uint32_t(rows.size()), std::uint32_t(rows[0].size()));
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw FormatError("ragged matrix");
        for (std::uint32_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] >= ctx.q()) throw FormatError("matrix entry out of field range");
            G.at(r, c) = rows[r][c];
        }
    }
    return code_core::make_code(ctx, std::move(G));
}

json verdict_to_json(const code_core::MinimalityVerdict& v) {
    json j;
    j["minimal"] = v.minimal;
    if (v.counterexample) {
        j["counterexample"] = {{"covering", v.counterexample->first},
                               {"covered", v.counterexample->second}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

json predicted_to_json(const construction::PredictedParams& pp) {
    json j;
    j["format_version"] = kFormatVersion;
    j["n"] = bigint_to_json(pp.n);
    j["dim"] = pp.dim;
    j["w_min_formula"] = bigint_to_json(pp.w_min_formula);
    j["w_max_lower"] = bigint_to_json(pp.w_max_lower);
    j["constraint1"] = pp.constraint1;
    j["constraint2"] = pp.constraint2;
    j["corollary_region"] = pp.corollary_region;
    return j;
}

json report_to_json(const construction::VerificationReport& rep) {
    json j;
    j["format_version"] = kFormatVersion;
    j["all_pass"] = rep.all_pass;
    j["minimal"] = rep.minimal;
    j["ab_holds"] = rep.ab_holds;
    j["w_min"] = rep.w_min;
    j["w_max"] = rep.w_max;
    json claims = json::array();
    for (const auto& c : rep.claims)
        claims.push_back({{"claim", c.name},
                          {"predicted", c.predicted},
                          {"observed", c.observed},
                          {"pass", c.pass}});
    j["claims"] = claims;
    return j;
}

std::string weights_to_csv(const std::map<std::uint32_t, std::uint64_t>& dist) {
    std::ostringstream out;
    out << "weight,count\n";
    for (const auto& [w, cnt] : dist) out << w << "," << cnt << "\n";
    return out.str();
}

json bundle_to_json(const sss::ShareBundle& b) {
    json j;
    j["format_version"] = kFormatVersion;
    j["secret_omitted"] = true;
    json shares = json::object();
    for (const auto& [i, e] : b.shares) shares[std::to_string(i)] = e;
    j["shares"] = shares;
    j["seed"] = b.seed;
    return j;
}

sss::ShareBundle bundle_from_json(const json& j) {
    sss::ShareBundle b;
    b.seed = j.value("seed", std::uint64_t(0));
    auto shares = require<json>(j, "shares");
    for (auto it = shares.begin(); it != shares.end(); ++it) {
        std::uint32_t idx;
        try {
            idx = std::uint32_t(std::stoul(it.key()));
        } catch (...) {
            throw FormatError("share key is not a participant index: " + it.key());
        }
        b.shares[idx] = it.value().get<gf::Elem>();
    }
    return b;
}

json access_sets_to_json(const std::vector<sss::AccessSet>& sets) {
    json j = json::array();
    for (const auto& s : sets) j.push_back(std::vector<std::uint32_t>(s.begin(), s.end()));
    return j;
}

std::vector<sss::AccessSet> access_sets_from_json(const json& j) {
    std::vector<sss::AccessSet> sets;
    for (const auto& arr : j) {
        auto v = arr.get<std::vector<std::uint32_t>>();
        sets.emplace_back(v.begin(), v.end());
    }
    return sets;
}

}  // namespace mincode::json_io
