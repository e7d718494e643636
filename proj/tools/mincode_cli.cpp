// mincode: build, verify and experiment with the C_f code family and the
// Massey secret sharing scheme on its dual.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "mincode/json_io.hpp"

using namespace mincode;
using json_io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaim = 1;     // mathematical claim / authorization failure
constexpr int kExitResource = 2;  // cap, format or descriptor problems

struct DescriptorFlags {
    std::optional<std::uint32_t> q, p, h, m, k;
    std::vector<gf::Elem> alpha;
    std::vector<gf::Elem> irreducible;
    std::string file;
};

void add_descriptor_flags(CLI::App* cmd, DescriptorFlags& f) {
    cmd->add_option("-q,--order", f.q, "Field order q = p^h (prime power)");
    cmd->add_option("-p,--prime", f.p, "Field characteristic p (odd prime)");
    cmd->add_option("-h,--ext-degree", f.h, "Extension degree h (default 1)");
    cmd->add_option("-m,--ambient", f.m, "Ambient dimension m");
    cmd->add_option("-k,--cutoff", f.k, "Bucket cutoff k");
    cmd->add_option("--alpha", f.alpha, "Bucket values alpha_1..alpha_k (default all ones)")
        ->delimiter(',');
    cmd->add_option("--irreducible", f.irreducible,
                    "Modulus coefficients, low degree first (default: smallest)")
        ->delimiter(',');
    cmd->add_option("--descriptor", f.file, "Descriptor JSON file (exclusive with inline flags)");
}

// Smallest prime factor decomposition q = p^h; rejects non prime powers.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
    if (q < 2) throw Error("q must be >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t h = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++h;
    }
    if (rest != 1) throw Error("q = " + std::to_string(q) + " is not a prime power");
    return {p, h};
}

construction::CodeDescriptor resolve_descriptor(const DescriptorFlags& f) {
    bool inline_given = f.q || f.p || f.h || f.m || f.k || !f.alpha.empty() ||
                        !f.irreducible.empty();
    if (!f.file.empty() && inline_given)
        throw FormatError("give either --descriptor or inline flags, not both");

    construction::CodeDescriptor d;
    if (!f.file.empty()) {
        std::ifstream in(f.file);
        if (!in) throw FormatError("cannot open descriptor file: " + f.file);
        json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(std::string("bad descriptor JSON: ") + e.what());
        }
        d = json_io::descriptor_from_json(j);
    } else {
        if (f.q && (f.p || f.h)) throw FormatError("-q conflicts with -p/-h");
        if (f.q) {
            auto [p, h] = factor_prime_power(*f.q);
            d.p = p;
            d.h = h;
        } else {
            if (!f.p) throw FormatError("need -q or -p");
            d.p = *f.p;
            d.h = f.h.value_or(1);
        }
        if (!f.m || !f.k) throw FormatError("need -m and -k");
        d.m = *f.m;
        d.k = *f.k;
        d.alpha = f.alpha;
        d.irreducible = f.irreducible;
    }
    for (const std::string& w : construction::validate(d)) std::cerr << "warning: " << w << "\n";
    return d;
}

std::uint64_t resolve_cap(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("MINCODE_CAP")) return std::stoull(env);
    return linalg::kDefaultCap;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write file: " + path);
    out << content;
}

sss::AccessSet parse_set(const std::vector<std::uint32_t>& members, const std::string& file) {
    if (!file.empty() && !members.empty())
        throw FormatError("give either --members or --set-file, not both");
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw FormatError("cannot open set file: " + file);
        json j;
        in >> j;
        auto v = j.get<std::vector<std::uint32_t>>();
        return sss::AccessSet(v.begin(), v.end());
    }
    return sss::AccessSet(members.begin(), members.end());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal-code workbench: C_f construction, verification, secret sharing"};
    app.set_help_flag("--help", "Print help");
    app.require_subcommand(1);

    std::optional<std::uint64_t> cap_flag;
    std::uint32_t workers = 1;
    app.add_option("--cap", cap_flag, "Enumeration cap (or MINCODE_CAP env var)");
    app.add_option("--workers", workers, "Worker threads for enumeration phases");

    DescriptorFlags dparams, dbuild, dverify, dsss;

    auto* cmd_params = app.add_subcommand("params", "Predicted parameters, no code built");
    add_descriptor_flags(cmd_params, dparams);

    auto* cmd_build = app.add_subcommand("build", "Build the code, export the generator matrix");
    add_descriptor_flags(cmd_build, dbuild);
    std::string build_out, build_weights;
    cmd_build->add_option("--out", build_out, "Generator JSON output (default stdout)");
    cmd_build->add_option("--weights", build_weights, "Also write weight,count CSV here");

    auto* cmd_verify = app.add_subcommand("verify", "Run every verifiable claim on an instance");
    add_descriptor_flags(cmd_verify, dverify);
    std::string gen_file, report_out, weights_out;
    cmd_verify->add_option("--generator-file", gen_file,
                           "Check an arbitrary generator matrix instead (minimality + AB only)");
    cmd_verify->add_option("--report", report_out, "Report JSON output (default stdout)");
    cmd_verify->add_option("--weights", weights_out, "Weight distribution CSV output");

    auto* cmd_sss = app.add_subcommand("sss", "Massey secret sharing on the dual code");
    add_descriptor_flags(cmd_sss, dsss);
    cmd_sss->require_subcommand(1);

    auto* sss_deal = cmd_sss->add_subcommand("deal", "Deal shares for a secret");
    std::uint32_t secret = 0;
    std::uint64_t seed = 0;
    bool os_entropy = false;
    std::string bundle_out;
    sss_deal->add_option("--secret", secret, "Secret (canonical encoding)")->required();
    sss_deal->add_option("--seed", seed, "PRNG seed (default 0)");
    sss_deal->add_flag("--os-entropy", os_entropy, "Draw the seed from the OS instead");
    sss_deal->add_option("--out", bundle_out, "Bundle JSON output (default stdout)");

    auto* sss_rec = cmd_sss->add_subcommand("reconstruct", "Recover the secret from shares");
    std::string bundle_in, set_file;
    std::vector<std::uint32_t> members;
    bool print_coeffs = false;
    sss_rec->add_option("--bundle", bundle_in, "Share bundle JSON")->required();
    sss_rec->add_option("--members", members, "Access set, comma separated")->delimiter(',');
    sss_rec->add_option("--set-file", set_file, "Access set as a JSON array");
    sss_rec->add_flag("--coeffs", print_coeffs, "Print the reconstruction coefficients");

    auto* sss_access = cmd_sss->add_subcommand("access-sets", "Enumerate minimal access sets");
    std::string access_out;
    sss_access->add_option("--out", access_out, "Output JSON (default stdout)");

    auto* sss_check = cmd_sss->add_subcommand("check", "Authorization / perfectness of a set");
    std::vector<std::uint32_t> check_members;
    std::string check_set_file;
    sss_check->add_option("--members", check_members, "Access set, comma separated")
        ->delimiter(',');
    sss_check->add_option("--set-file", check_set_file, "Access set as a JSON array");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitResource;
    }

    try {
        std::uint64_t cap = resolve_cap(cap_flag);

        if (*cmd_params) {
            auto d = resolve_descriptor(dparams);
            auto pp = construction::predict_params(d);
            write_output("", json_io::predicted_to_json(pp).dump(2));
            return kExitOk;
        }

        if (*cmd_build) {
            auto d = resolve_descriptor(dbuild);
            auto ctx = construction::field_of(d);
            auto code = construction::build_code(ctx, d, cap);
            write_output(build_out, json_io::generator_to_json(code).dump(2) + "\n");
            if (!build_weights.empty()) {
                auto dist = code_core::weight_distribution(code, cap, workers);
                write_output(build_weights, json_io::weights_to_csv(dist));
            }
            return kExitOk;
        }

        if (*cmd_verify) {
            if (!gen_file.empty()) {
                std::ifstream in(gen_file);
                if (!in) throw FormatError("cannot open generator file: " + gen_file);
                json j;
                try {
                    in >> j;
                } catch (const nlohmann::json::exception& e) {
                    throw FormatError(std::string("bad generator JSON: ") + e.what());
                }
                auto code = json_io::generator_from_json(j);
                auto verdict = code_core::is_minimal_code(code, cap, workers);
                json out = json_io::verdict_to_json(verdict);
                auto ab = code_core::ab_sufficient(code, cap);
                out["ab_holds"] = ab.holds;
                out["ab_ratio"] = std::to_string(ab.ratio_num) + "/" +
                                  std::to_string(ab.ratio_den);
                write_output(report_out, out.dump(2) + "\n");
                if (!weights_out.empty())
                    write_output(weights_out, json_io::weights_to_csv(
                                                  code_core::weight_distribution(code, cap, workers)));
                return verdict.minimal ? kExitOk : kExitClaim;
            }
            auto d = resolve_descriptor(dverify);
            auto rep = construction::verify_instance(d, cap, workers);
            write_output(report_out, json_io::report_to_json(rep).dump(2) + "\n");
            if (!weights_out.empty())
                write_output(weights_out, json_io::weights_to_csv(rep.weights));
            return rep.all_pass ? kExitOk : kExitClaim;
        }

        if (*cmd_sss) {
            auto d = resolve_descriptor(dsss);
            auto inst = sss::make_instance(d, cap);

            if (*sss_deal) {
                if (os_entropy) seed = std::random_device{}();
                auto b = sss::deal(inst, gf::Elem(secret), seed);
                write_output(bundle_out, json_io::bundle_to_json(b).dump(2) + "\n");
                return kExitOk;
            }
            if (*sss_rec) {
                std::ifstream in(bundle_in);
                if (!in) throw FormatError("cannot open bundle: " + bundle_in);
                json j;
                try {
                    in >> j;
                } catch (const nlohmann::json::exception& e) {
                    throw FormatError(std::string("bad bundle JSON: ") + e.what());
                }
                auto bundle = json_io::bundle_from_json(j);
                auto set = parse_set(members, set_file);
                if (print_coeffs) {
                    auto lambda = sss::reconstruction_coefficients(inst, set);
                    std::cout << "coefficients: " << json(lambda).dump() << "\n";
                }
                gf::Elem s = sss::reconstruct(inst, set, bundle.shares);
                std::cout << "secret: " << s << "\n";
                return kExitOk;
            }
            if (*sss_access) {
                auto sets = sss::enumerate_minimal_access_sets(inst, cap);
                write_output(access_out, json_io::access_sets_to_json(sets).dump(2) + "\n");
                return kExitOk;
            }
            if (*sss_check) {
                auto set = parse_set(check_members, check_set_file);
                bool auth = sss::is_authorized(inst, set);
                json out;
                out["authorized"] = auth;
                if (!auth) out["perfect"] = sss::perfectness_check(inst, set);
                std::cout << out.dump(2) << "\n";
                return kExitOk;
            }
        }
    } catch (const NotAuthorized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClaim;
    } catch (const NotMinimal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClaim;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitOk;
}
