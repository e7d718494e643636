#ifndef MINCODE_SSS_HPP
#define MINCODE_SSS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "mincode/construction.hpp"

namespace mincode::sss {

using gf::Elem;
using gf::FieldContext;
using linalg::Vec;
using code_core::LinearCode;
using construction::CodeDescriptor;

// Participant indices are 1-based coordinates of the sharing code; the
// secret sits at coordinate 1 and participants are P_2 .. P_n.
using AccessSet = std::set<std::uint32_t>;

// Massey scheme on the dual of the constructed code: shares are codeword
// coordinates of D = C^perp, so minimal authorized subsets correspond to
// the (fully enumerable) minimal codewords of C with first component 1.
struct SSSInstance {
    FieldContext ctx;
    CodeDescriptor descriptor;
    LinearCode code;          // C_f, kept for access-set enumeration
    LinearCode sharing_code;  // D = C_f^perp, carries the shares
    std::uint32_t n = 0;      // participants are 2 .. n
};

struct ShareBundle {
    std::map<std::uint32_t, Elem> shares;  // participant -> share
    Elem secret = 0;                       // dealer-side only
    std::uint64_t seed = 0;
};

SSSInstance make_instance(const CodeDescriptor& d,
                          std::uint64_t cap = linalg::kDefaultCap);

// Uniform over {u : u . G_1 = secret}, deterministic for a fixed seed.
ShareBundle deal(const SSSInstance& inst, Elem secret, std::uint64_t seed);

// True iff column G_1 lies in the span of the members' columns.
bool is_authorized(const SSSInstance& inst, const AccessSet& members);

// Recombination coefficients for an authorized set (depend only on the set).
Vec reconstruction_coefficients(const SSSInstance& inst, const AccessSet& members);

Elem reconstruct(const SSSInstance& inst, const AccessSet& members,
                 const std::map<std::uint32_t, Elem>& shares);

// All minimal authorized subsets, via the minimal codewords of C_f with
// first coordinate 1. Runs the minimality oracle first; throws NotMinimal
// if it refutes the premise.
std::vector<AccessSet> enumerate_minimal_access_sets(const SSSInstance& inst,
                                                     std::uint64_t cap = linalg::kDefaultCap);

// For an unauthorized set: every secret value stays consistent with the
// members' shares (rank argument, no sampling). Throws AuthorizedSet when
// the set can reconstruct.
bool perfectness_check(const SSSInstance& inst, const AccessSet& members);

}  // namespace mincode::sss

#endif
