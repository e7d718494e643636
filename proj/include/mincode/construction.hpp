#ifndef MINCODE_CONSTRUCTION_HPP
#define MINCODE_CONSTRUCTION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mincode/code_core.hpp"

namespace mincode::construction {

using gf::Elem;
using gf::FieldContext;
using linalg::Vec;
using code_core::LinearCode;
using BigInt = boost::multiprecision::cpp_int;

// Parameters of one code instance: GF(p^h), ambient dimension m, bucket
// cutoff k, and the nonzero bucket values alpha_1..alpha_k.
struct CodeDescriptor {
    std::uint32_t p = 3;
    std::uint32_t h = 1;
    std::uint32_t m = 4;
    std::uint32_t k = 2;
    std::vector<Elem> alpha;  // empty means all ones
    std::vector<Elem> irreducible;  // empty means default modulus
};

// Hard errors throw; soft issues (k = 1, outside the stated k range) come
// back as warning strings. Fills in the default alpha.
std::vector<std::string> validate(CodeDescriptor& d);

FieldContext field_of(const CodeDescriptor& d);

// f(x) = alpha_{w(x)} when 1 <= w(x) <= k, 0 when w(x) > k.
Elem eval_f(const CodeDescriptor& d, const Vec& x);

// Generator matrix rows are c(1,0), c(0,e_1), ..., c(0,e_m); columns run
// over F_q^m \ {0} in canonical position-index order.
LinearCode build_code(const FieldContext& ctx, const CodeDescriptor& d,
                      std::uint64_t cap = linalg::kDefaultCap);

// Codeword of message (u, v): entry at x is u f(x) + v.x.
Vec codeword_uv(const FieldContext& ctx, const CodeDescriptor& d, Elem u, const Vec& v,
                std::uint64_t cap = linalg::kDefaultCap);

// Zero set of c(u,v) split into the weight->k hyperplane part and the k
// per-weight affine slices; entries are position indices into F_q^m.
struct SupportComplement {
    std::vector<std::uint64_t> hbar;               // v.y = 0, w(y) > k
    std::vector<std::vector<std::uint64_t>> lbar;  // v.y = -alpha_i u, w(y) = i
};

SupportComplement support_complement(const FieldContext& ctx, const CodeDescriptor& d,
                                     Elem u, const Vec& v,
                                     std::uint64_t cap = linalg::kDefaultCap);

// Finds A in H(v)\H(v') and B in H(v')\H(v), both of weight > k, by
// exhaustive scan. Throws SameHyperplane when v and v' are proportional.
std::pair<Vec, Vec> verify_hyperplane_separation(const FieldContext& ctx,
                                                 const CodeDescriptor& d, const Vec& v,
                                                 const Vec& v_prime,
                                                 std::uint64_t cap = linalg::kDefaultCap);

struct PredictedParams {
    BigInt n;             // q^m - 1
    std::uint32_t dim;    // m + 1
    BigInt w_min_formula; // sum_{i=1..k} C(m,i)(q-1)^i
    BigInt w_max_lower;   // q^m - q^(m-1)
    bool constraint1 = false;
    bool constraint2 = false;
    bool corollary_region = false;
};

// Pure big-integer arithmetic; works for parameters far past the build cap.
PredictedParams predict_params(const CodeDescriptor& d);

BigInt binomial(std::uint32_t n, std::uint32_t k);

struct Claim {
    std::string name;
    std::string predicted;
    std::string observed;
    bool pass = false;
};

struct VerificationReport {
    std::vector<Claim> claims;
    bool all_pass = true;
    bool minimal = false;
    bool ab_holds = false;
    std::uint64_t w_min = 0;
    std::uint64_t w_max = 0;
    std::map<std::uint32_t, std::uint64_t> weights;
};

// Builds the code and checks every verifiable claim about it: dimensions,
// minimality, the per-message weight formulas, the w_min/w_max bounds and
// the Ashikhmin-Barg ratio.
VerificationReport verify_instance(const CodeDescriptor& d,
                                   std::uint64_t cap = linalg::kDefaultCap,
                                   std::uint32_t workers = 1);

}  // namespace mincode::construction

#endif
