#ifndef MINCODE_CODE_CORE_HPP
#define MINCODE_CODE_CORE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mincode/linalg.hpp"

namespace mincode::code_core {

using gf::Elem;
using gf::FieldContext;
using linalg::Matrix;
using linalg::Vec;

// A linear code given by a generator matrix over GF(q). The stored basis is
// the first maximal independent subset of the supplied rows; messages are
// coefficient vectors against that basis, so there are exactly q^dim
// distinct codewords.
struct LinearCode {
    FieldContext ctx;
    Matrix G;      // as supplied
    Matrix basis;  // dim x n, independent rows of G
    std::uint32_t n = 0;
    std::uint32_t dim = 0;
};

// Throws ZeroColumn if any column of G is the zero vector (the secret
// sharing construction needs every column nonzero).
LinearCode make_code(const FieldContext& ctx, Matrix G);

Vec codeword(const LinearCode& c, const Vec& message);

// Visits all q^dim codewords, messages in canonical base-q order.
void for_each_codeword(const LinearCode& c,
                       const std::function<void(const Vec& message, const Vec& word)>& fn,
                       std::uint64_t cap = linalg::kDefaultCap);

// weight -> count over all q^dim codewords; streaming, never stores them.
std::map<std::uint32_t, std::uint64_t> weight_distribution(
    const LinearCode& c, std::uint64_t cap = linalg::kDefaultCap,
    std::uint32_t workers = 1);

std::vector<std::size_t> support(const Vec& word);

// support(c2) subseteq support(c1)
bool covers(const Vec& c1, const Vec& c2);

struct MinimalityVerdict {
    bool minimal = true;
    // Present when not minimal: covering strictly-or-equally contains covered.
    std::optional<std::pair<Vec, Vec>> counterexample;  // (covering, covered)
};

// Brute-force minimality oracle over projective representatives (one word
// per scalar class, first nonzero entry normalized to 1).
MinimalityVerdict is_minimal_code(const LinearCode& c,
                                  std::uint64_t cap = linalg::kDefaultCap,
                                  std::uint32_t workers = 1);

// Unreduced all-pairs oracle, for equivalence testing at tiny scale.
MinimalityVerdict is_minimal_code_naive(const LinearCode& c,
                                        std::uint64_t cap = linalg::kDefaultCap);

struct AbResult {
    std::uint64_t w_min = 0;
    std::uint64_t w_max = 0;
    std::uint64_t ratio_num = 0;  // w_min/w_max reduced
    std::uint64_t ratio_den = 1;
    bool holds = false;  // w_min/w_max > (q-1)/q
};

// Ashikhmin-Barg sufficient condition, exact rational comparison.
// Throws ZeroCode when the code has no nonzero codeword.
AbResult ab_sufficient(const LinearCode& c, std::uint64_t cap = linalg::kDefaultCap);

// Dual code: generator = null space basis of the row basis of G.
LinearCode dual(const LinearCode& c);

}  // namespace mincode::code_core

#endif
