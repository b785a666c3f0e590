#include "permstat/bijections.hpp"

#include <stdexcept>

#include "permstat/statistics.hpp"

namespace permstat {

SignedPermutation s_of(const SignedPermutation& pi) {
    if (!pi.member_of(GroupLabel::L)) {
        throw std::domain_error("s_of requires a signed even permutation");
    }
    auto sigma = pi.sorted();
    // The sorted window lies in L exactly when the negative sum is even;
    // otherwise one right swap restores evenness without moving any sign.
    if (neg_sum(pi) % 2 != 0) {
        sigma = sigma * generator_s(1, pi.rank());
    }
    return sigma;
}

Decomposition decompose(const SignedPermutation& pi) {
    auto sigma = s_of(pi);
    auto u = sigma.inverse() * pi;
    return Decomposition{std::move(sigma), std::move(u)};
}

std::optional<std::string> validate_decomposition(const SignedPermutation& pi,
                                                  const Decomposition& d) {
    if (d.sigma.rank() != pi.rank() || d.u.rank() != pi.rank()) {
        return "rank mismatch between the parts and the input";
    }
    if (!(d.sigma * d.u == pi)) return "parts do not multiply back to the input";
    if (!d.sigma.member_of(GroupLabel::L)) return "signed part is not in L";
    if (!d.u.member_of(GroupLabel::A)) return "unsigned part is not in A";
    if (!(d.sigma == s_of(pi))) return "signed part is not the canonical one";
    return std::nullopt;
}

PsiStages psi_stages(const SignedPermutation& v) {
    if (!v.member_of(GroupLabel::A)) {
        throw std::domain_error("psi requires an unsigned even permutation");
    }
    const int rank = v.rank();
    if (rank == 1) {
        return PsiStages{v, {}, v, word(v), {}, {}, v};
    }
    auto a_word = a_factorize(v);
    auto projected = evaluate(covering_f(a_word), rank - 1);
    auto transformed = rtl_phi(word(projected));
    auto s_word = s_factorize(window_of(transformed));
    auto lifted = lift_g(a_word, s_word);
    auto result = evaluate(lifted, rank);
    return PsiStages{v,
                     std::move(a_word),
                     std::move(projected),
                     std::move(transformed),
                     std::move(s_word),
                     std::move(lifted),
                     std::move(result)};
}

SignedPermutation psi(const SignedPermutation& v) { return psi_stages(v).result; }

SignedPermutation theta(const SignedPermutation& pi, bool validate) {
    auto d = decompose(pi);
    if (validate) {
        if (auto problem = validate_decomposition(pi, d)) {
            throw std::logic_error("theta: canonical splitting failed: " + *problem);
        }
    }
    return d.sigma * psi(d.u);
}

ThetaStages theta_stages(const SignedPermutation& pi) {
    auto split = decompose(pi);
    auto stages = psi_stages(split.u);
    auto result = split.sigma * stages.result;
    return ThetaStages{pi, std::move(split), std::move(stages), std::move(result)};
}

}  // namespace permstat
