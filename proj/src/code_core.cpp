#include "mincode/code_core.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace mincode::code_core {

namespace {

std::uint64_t message_count(const LinearCode& c, std::uint64_t cap) {
    return linalg::pow_checked(c.ctx.q(), c.dim, cap);
}

Vec message_from_index(const LinearCode& c, std::uint64_t idx) {
    return linalg::vector_from_index(c.ctx, c.dim, idx);
}

// Packed support bitmask, one bit per coordinate.
struct SupportMask {
    std::vector<std::uint64_t> bits;
    std::uint32_t weight = 0;

    explicit SupportMask(const Vec& word) : bits((word.size() + 63) / 64, 0) {
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i] != 0) {
                bits[i / 64] |= std::uint64_t(1) << (i % 64);
                ++weight;
            }
    }

    bool subset_of(const SupportMask& o) const {
        for (std::size_t w = 0; w < bits.size(); ++w)
            if (bits[w] & ~o.bits[w]) return false;
        return true;
    }
};

}  // namespace

LinearCode make_code(const FieldContext& ctx, Matrix G) {
    for (std::uint32_t c = 0; c < G.cols && G.rows > 0; ++c) {
        bool all_zero = true;
        for (std::uint32_t r = 0; r < G.rows; ++r)
            if (G.at(r, c) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) throw ZeroColumn("generator matrix has a zero column");
    }
    LinearCode code;
    code.ctx = ctx;
    code.n = G.cols;
    code.basis = linalg::row_basis(ctx, G);
    code.dim = code.basis.rows;
    code.G = std::move(G);
    return code;
}

Vec codeword(const LinearCode& c, const Vec& message) {
    if (message.size() != c.dim) throw DimensionMismatch("message length != code dimension");
    Vec word(c.n, 0);
    for (std::uint32_t i = 0; i < c.dim; ++i) {
        if (message[i] == 0) continue;
        for (std::uint32_t j = 0; j < c.n; ++j)
            word[j] = c.ctx.add(word[j], c.ctx.mul(message[i], c.basis.at(i, j)));
    }
    return word;
}

void for_each_codeword(const LinearCode& c,
                       const std::function<void(const Vec&, const Vec&)>& fn,
                       std::uint64_t cap) {
    std::uint64_t total = message_count(c, cap);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec msg = message_from_index(c, idx);
        fn(msg, codeword(c, msg));
    }
}

std::map<std::uint32_t, std::uint64_t> weight_distribution(const LinearCode& c,
                                                           std::uint64_t cap,
                                                           std::uint32_t workers) {
    std::uint64_t total = message_count(c, cap);
    if (workers < 1) workers = 1;
    if (workers == 1 || total < 1024) {
        std::map<std::uint32_t, std::uint64_t> dist;
        for (std::uint64_t idx = 0; idx < total; ++idx)
            ++dist[linalg::weight(codeword(c, message_from_index(c, idx)))];
        return dist;
    }
    std::vector<std::vector<std::uint64_t>> partial(workers,
                                                    std::vector<std::uint64_t>(c.n + 1, 0));
    std::vector<std::thread> pool;
    for (std::uint32_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            std::uint64_t lo = total * t / workers, hi = total * (t + 1) / workers;
            for (std::uint64_t idx = lo; idx < hi; ++idx)
                ++partial[t][linalg::weight(codeword(c, message_from_index(c, idx)))];
        });
    }
    for (auto& th : pool) th.join();
    std::map<std::uint32_t, std::uint64_t> dist;
    for (std::uint32_t w = 0; w <= c.n; ++w) {
        std::uint64_t s = 0;
        for (std::uint32_t t = 0; t < workers; ++t) s += partial[t][w];
        if (s) dist[w] = s;
    }
    return dist;
}

std::vector<std::size_t> support(const Vec& word) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != 0) s.push_back(i);
    return s;
}

bool covers(const Vec& c1, const Vec& c2) {
    if (c1.size() != c2.size()) throw LengthMismatch("covers on words of different length");
    for (std::size_t i = 0; i < c1.size(); ++i)
        if (c2[i] != 0 && c1[i] == 0) return false;
    return true;
}

MinimalityVerdict is_minimal_code(const LinearCode& c, std::uint64_t cap,
                                  std::uint32_t workers) {
    std::uint64_t total = message_count(c, cap);

    // One representative per scalar class: messages whose first nonzero
    // entry is 1. Valid because supports are scalar-invariant.
    std::vector<Vec> reps;
    std::vector<SupportMask> masks;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        Vec msg = message_from_index(c, idx);
        Elem first = 0;
        for (Elem e : msg)
            if (e != 0) {
                first = e;
                break;
            }
        if (first != 1) continue;
        Vec word = codeword(c, msg);
        reps.push_back(std::move(word));
        masks.emplace_back(reps.back());
    }

    // Sort by weight: a support can only sit inside one at least as heavy.
    std::vector<std::uint32_t> order(reps.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return masks[a].weight < masks[b].weight;
    });

    // Representatives are pairwise non-proportional, so any containment
    // (including equal supports) between distinct reps breaks minimality.
    MinimalityVerdict verdict;
    if (workers < 1) workers = 1;
    std::atomic<std::uint64_t> best{~std::uint64_t(0)};  // encoded (i << 32) | j
    auto scan = [&](std::uint32_t t) {
        for (std::size_t i = t; i < order.size(); i += workers) {
            const SupportMask& mi = masks[order[i]];
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                if (mi.subset_of(masks[order[j]])) {
                    std::uint64_t enc = (std::uint64_t(i) << 32) | j;
                    std::uint64_t cur = best.load();
                    while (enc < cur && !best.compare_exchange_weak(cur, enc)) {
                    }
                    break;
                }
            }
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (std::uint32_t t = 0; t < workers; ++t) pool.emplace_back(scan, t);
        for (auto& th : pool) th.join();
    }
    if (best.load() != ~std::uint64_t(0)) {
        std::uint32_t i = std::uint32_t(best.load() >> 32);
        std::uint32_t j = std::uint32_t(best.load() & 0xffffffffu);
        verdict.minimal = false;
        verdict.counterexample = {reps[order[j]], reps[order[i]]};
    }
    return verdict;
}

MinimalityVerdict is_minimal_code_naive(const LinearCode& c, std::uint64_t cap) {
    std::uint64_t total = message_count(c, cap);
    std::vector<Vec> words;
    words.reserve(total - 1);
    for (std::uint64_t idx = 1; idx < total; ++idx)
        words.push_back(codeword(c, message_from_index(c, idx)));

    auto proportional = [&](const Vec& a, const Vec& b) {
        for (Elem lambda = 1; lambda < c.ctx.q(); ++lambda) {
            bool eq = true;
            for (std::size_t i = 0; i < a.size() && eq; ++i)
                eq = (a[i] == c.ctx.mul(lambda, b[i]));
            if (eq) return true;
        }
        return false;
    };

    MinimalityVerdict verdict;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i == j) continue;
            if (covers(words[i], words[j]) && !proportional(words[i], words[j])) {
                verdict.minimal = false;
                verdict.counterexample = {words[i], words[j]};
                return verdict;
            }
        }
    return verdict;
}

AbResult ab_sufficient(const LinearCode& c, std::uint64_t cap) {
    auto dist = weight_distribution(c, cap);
    dist.erase(0);
    if (dist.empty()) throw ZeroCode("code has no nonzero codeword");
    AbResult r;
    r.w_min = dist.begin()->first;
    r.w_max = dist.rbegin()->first;
    std::uint64_t g = std::gcd(r.w_min, r.w_max);
    r.ratio_num = r.w_min / g;
    r.ratio_den = r.w_max / g;
    // w_min/w_max > (q-1)/q  <=>  q*w_min > (q-1)*w_max, exactly.
    r.holds = std::uint64_t(c.ctx.q()) * r.w_min > std::uint64_t(c.ctx.q() - 1) * r.w_max;
    return r;
}

LinearCode dual(const LinearCode& c) {
    Matrix ns = linalg::null_space(c.ctx, c.basis);
    return make_code(c.ctx, std::move(ns));
}

}  // namespace mincode::code_core
