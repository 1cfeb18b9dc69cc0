#include "pignose/genfun.hpp"

#include "pignose/errors.hpp"

namespace pignose {

GenTable gen_table(int n, int limit) {
    if (n < 0 || n > limit)
        throw LimitExceededError("B_n tables limited to 0 <= n <= " + std::to_string(limit));
    GenTable table;
    table.n = n;
    table.b_k.assign(static_cast<std::size_t>(2 * n) + 1, MultiPoly());
    table.b_star.assign(static_cast<std::size_t>(2 * n) + 1, MultiPoly());
    table.eulerian_b.assign(static_cast<std::size_t>(n) + 1, MultiPoly());
    table.des_b_count.assign(static_cast<std::size_t>(n) + 1, 0);
    for_each_bn(n, [&](const SignedPerm& pi) {
        StatRecord s = stats(pi);
        int cro = crossings(pi);
        table.b.add_term({s.fwex, s.neg, cro}, 1);
        table.b_k[static_cast<std::size_t>(s.fwex)].add_term({0, s.neg, cro}, 1);
        int star_t = s.neg + (pi.n() > 0 && pi.image(1) > 0 ? 1 : 0);
        table.b_star[static_cast<std::size_t>(s.fwex)].add_term({0, star_t, cro}, 1);
        table.eulerian_b[static_cast<std::size_t>(s.fwex / 2)].add_term({0, 0, cro}, 1);
        table.des_b_count[static_cast<std::size_t>(s.des_b)]++;
    }, limit);
    return table;
}

MultiPoly b_poly_perms(int n, int limit) { return gen_table(n, limit).b; }

MultiPoly b_nk(int n, int k, int limit) {
    if (k < 0 || k > 2 * n) return MultiPoly::zero();
    return gen_table(n, limit).b_k[static_cast<std::size_t>(k)];
}

MultiPoly b_star(int n, int k, int limit) {
    if (k < 1 || k > 2 * n) return MultiPoly::zero();
    return gen_table(n, limit).b_star[static_cast<std::size_t>(k)];
}

MultiPoly eulerian_b_poly(int n, int k, int limit) {
    if (k < 0 || k > n) return MultiPoly::zero();
    GenTable table = gen_table(n, limit);
    MultiPoly defining = table.eulerian_b[static_cast<std::size_t>(k)];
    MultiPoly via_bnk = eval_subst(table.b_k[static_cast<std::size_t>(2 * k)], std::nullopt, 1);
    if (2 * k + 1 <= 2 * n)
        via_bnk += eval_subst(table.b_k[static_cast<std::size_t>(2 * k + 1)], std::nullopt, 1);
    if (!(defining == via_bnk))
        throw StructureViolationError("the two routes to E^B_{n,k}(q) disagree at n=" +
                                      std::to_string(n) + ", k=" + std::to_string(k));
    return defining;
}

Int eulerian_b_count(int n, int k, int limit) {
    if (k < 0 || k > n) return 0;
    return gen_table(n, limit).des_b_count[static_cast<std::size_t>(k)];
}

}  // namespace pignose
