#include "mincode/sss.hpp"

#include <random>
#include <string>

namespace mincode::sss {

namespace {

void check_members(const SSSInstance& inst, const AccessSet& members) {
    for (std::uint32_t i : members)
        if (i < 2 || i > inst.n)
            throw UnknownParticipant("participant " + std::to_string(i) + " does not exist");
}

std::vector<Vec> member_columns(const SSSInstance& inst, const AccessSet& members) {
    std::vector<Vec> cols;
    cols.reserve(members.size());
    for (std::uint32_t i : members) cols.push_back(inst.sharing_code.basis.col(i - 1));
    return cols;
}

}  // namespace

SSSInstance make_instance(const CodeDescriptor& d, std::uint64_t cap) {
    SSSInstance inst;
    inst.descriptor = d;
    construction::validate(inst.descriptor);
    inst.ctx = construction::field_of(inst.descriptor);
    inst.code = construction::build_code(inst.ctx, inst.descriptor, cap);
    inst.sharing_code = code_core::dual(inst.code);  // make_code asserts no zero column
    inst.n = inst.sharing_code.n;
    return inst;
}

ShareBundle deal(const SSSInstance& inst, Elem secret, std::uint64_t seed) {
    const LinearCode& D = inst.sharing_code;
    Vec g1 = D.basis.col(0);

    // Fixed vector w with w . G_1 = 1, from the first nonzero entry of G_1.
    std::uint32_t j0 = 0;
    while (g1[j0] == 0) ++j0;
    Elem w_coeff = inst.ctx.inv(g1[j0]);

    // Sample u uniformly, project onto {u . G_1 = 0}, then shift by secret.
    // mt19937_64 plus modular reduction keeps bundles byte-identical across
    // platforms (std::uniform_int_distribution is not portable).
    std::mt19937_64 rng(seed);
    Vec u(D.dim);
    for (std::uint32_t i = 0; i < D.dim; ++i) u[i] = Elem(rng() % inst.ctx.q());
    Elem t = linalg::dot(inst.ctx, u, g1);
    u[j0] = inst.ctx.sub(u[j0], inst.ctx.mul(t, w_coeff));
    u[j0] = inst.ctx.add(u[j0], inst.ctx.mul(secret, w_coeff));

    Vec word = code_core::codeword(D, u);
    ShareBundle b;
    b.secret = secret;
    b.seed = seed;
    for (std::uint32_t i = 2; i <= inst.n; ++i) b.shares[i] = word[i - 1];
    return b;
}

bool is_authorized(const SSSInstance& inst, const AccessSet& members) {
    check_members(inst, members);
    if (members.empty()) return false;
    Vec g1 = inst.sharing_code.basis.col(0);
    return linalg::solve_in_span(inst.ctx, member_columns(inst, members), g1).has_value();
}

Vec reconstruction_coefficients(const SSSInstance& inst, const AccessSet& members) {
    check_members(inst, members);
    Vec g1 = inst.sharing_code.basis.col(0);
    auto lambda = linalg::solve_in_span(inst.ctx, member_columns(inst, members), g1);
    if (!lambda) throw NotAuthorized("set cannot determine the secret");
    return *lambda;
}

Elem reconstruct(const SSSInstance& inst, const AccessSet& members,
                 const std::map<std::uint32_t, Elem>& shares) {
    Vec lambda = reconstruction_coefficients(inst, members);
    Elem s = 0;
    std::size_t j = 0;
    for (std::uint32_t i : members) {
        auto it = shares.find(i);
        if (it == shares.end())
            throw MissingShare("no share for participant " + std::to_string(i));
        s = inst.ctx.add(s, inst.ctx.mul(lambda[j], it->second));
        ++j;
    }
    return s;
}

std::vector<AccessSet> enumerate_minimal_access_sets(const SSSInstance& inst,
                                                     std::uint64_t cap) {
    auto verdict = code_core::is_minimal_code(inst.code, cap);
    if (!verdict.minimal)
        throw NotMinimal("constructed code is not minimal; access sets would be incomplete");

    std::vector<AccessSet> sets;
    code_core::for_each_codeword(
        inst.code,
        [&](const Vec&, const Vec& word) {
            if (word[0] != 1) return;
            AccessSet s;
            for (std::uint32_t i = 1; i < word.size(); ++i)
                if (word[i] != 0) s.insert(i + 1);
            sets.push_back(std::move(s));
        },
        cap);
    return sets;
}

bool perfectness_check(const SSSInstance& inst, const AccessSet& members) {
    check_members(inst, members);
    std::vector<Vec> cols = member_columns(inst, members);
    Vec g1 = inst.sharing_code.basis.col(0);

    // A learns nothing iff adding the secret column raises the rank: then
    // for each candidate secret the constraint system stays solvable.
    std::uint32_t dim = inst.sharing_code.dim;
    linalg::Matrix without(dim, std::uint32_t(cols.size()));
    linalg::Matrix with(dim, std::uint32_t(cols.size() + 1));
    for (std::uint32_t r = 0; r < dim; ++r) {
        for (std::uint32_t c = 0; c < cols.size(); ++c) {
            without.at(r, c) = cols[c][r];
            with.at(r, c) = cols[c][r];
        }
        with.at(r, std::uint32_t(cols.size())) = g1[r];
    }
    std::uint32_t r0 = linalg::rank(inst.ctx, without);
    std::uint32_t r1 = linalg::rank(inst.ctx, with);
    if (r0 == r1) throw AuthorizedSet("set is authorized; perfectness check is vacuous");
    return r1 == r0 + 1;
}

}  // namespace mincode::sss
