#ifndef MINCODE_GF_HPP
#define MINCODE_GF_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mincode/errors.hpp"

namespace mincode::gf {

// A field element is carried as its canonical integer encoding in [0, q).
// The element sum c_j t^j (polynomial basis) encodes as sum c_j p^j, so
// enc(0) = 0 and enc(1) = 1 in every field.
using Elem = std::uint32_t;

// Exact arithmetic in GF(p^h), p an odd prime, q = p^h <= 2^16.
// Immutable after construction; all operations are pure.
class FieldContext {
  public:
    static FieldContext make(std::uint32_t p, std::uint32_t h,
                             std::optional<std::vector<Elem>> irreducible = std::nullopt);

    std::uint32_t p() const { return p_; }
    std::uint32_t h() const { return h_; }
    std::uint32_t q() const { return q_; }

    // Monic irreducible modulus, coefficients low degree first, length h+1.
    // Empty for prime fields (h == 1).
    const std::vector<Elem>& irreducible() const { return irr_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws DivisionByZero on 0
    Elem pow(Elem a, std::uint64_t e) const;

    bool operator==(const FieldContext& o) const {
        return p_ == o.p_ && h_ == o.h_ && irr_ == o.irr_;
    }

    // Coefficient vector (length h, low degree first) <-> canonical encoding.
    std::vector<Elem> decompose(Elem a) const;
    Elem compose(const std::vector<Elem>& coeffs) const;

    // Default-constructed contexts are inert placeholders; use make().
    FieldContext() = default;

  private:
    std::uint32_t p_ = 0;
    std::uint32_t h_ = 0;
    std::uint32_t q_ = 0;
    std::vector<Elem> irr_;
};

// True iff the monic polynomial (low degree first, leading coefficient 1)
// has no monic divisor of degree in [1, deg/2] over GF(p).
bool is_irreducible(std::uint32_t p, const std::vector<Elem>& poly);

// Lexicographically smallest monic irreducible of degree h over GF(p),
// comparing low-degree coefficients first.
std::vector<Elem> smallest_irreducible(std::uint32_t p, std::uint32_t h);

}  // namespace mincode::gf

#endif
