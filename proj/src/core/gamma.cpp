#include "gamma.hpp"

#include <algorithm>
#include <map>

#include "affine.hpp"

namespace weyldft {

int GammaElement::sign(SignHom sigma) const {
    switch (sigma) {
        case SignHom::Identity: return 1;
        case SignHom::Det: return sign_det;
        case SignHom::Short: return sign_short;
        case SignHom::Long: return sign_long;
    }
    return 1;
}

namespace {

GammaElement compose(const GammaElement& a, const GammaElement& b) {
    GammaElement c;
    c.perm.resize(a.perm.size());
    for (std::size_t i = 0; i < a.perm.size(); ++i) c.perm[i] = b.perm[a.perm[i]];
    c.sign_det = a.sign_det * b.sign_det;
    c.sign_short = a.sign_short * b.sign_short;
    c.sign_long = a.sign_long * b.sign_long;
    return c;
}

int parity(Int k) { return k % 2 == 0 ? 1 : -1; }

std::vector<GammaElement> generators(const RootSystemData& R) {
    const int n = R.rank;
    std::vector<GammaElement> gens;
    auto add = [&](std::vector<int> perm, int se, int ss, int sl) {
        gens.push_back(GammaElement{std::move(perm), se, ss, sl});
    };
    std::vector<int> id(n + 1);
    for (int i = 0; i <= n; ++i) id[i] = i;

    switch (R.type.family) {
        case Family::A: {
            // Rotation of the cyclic diagram by one step.
            std::vector<int> p(n + 1);
            p[0] = n;
            for (int j = 1; j <= n; ++j) p[j] = j - 1;
            add(std::move(p), parity(n), 1, 1);
            break;
        }
        case Family::B: {
            std::vector<int> p(n + 1);
            for (int j = 0; j <= n; ++j) p[j] = n - j;
            add(std::move(p), parity(Int(n) * (n + 1) / 2), parity(n),
                parity(Int(n - 1) * n / 2));
            break;
        }
        case Family::C: {
            std::vector<int> p = id;
            std::swap(p[0], p[1]);
            add(std::move(p), -1, 1, -1);
            break;
        }
        case Family::D: {
            int k = n / 2;
            std::vector<int> p = id;
            std::swap(p[0], p[1]);
            std::swap(p[n - 1], p[n]);
            add(std::move(p), 1, 1, 1);
            if (n % 2 == 0) {
                std::vector<int> q(n + 1);
                q[0] = n - 1;
                q[1] = n;
                for (int j = 2; j <= n - 2; ++j) q[j] = n - j;
                q[n - 1] = 0;
                q[n] = 1;
                add(std::move(q), parity(k), 1, 1);
                std::vector<int> r(n + 1);
                for (int j = 0; j <= n; ++j) r[j] = n - j;
                add(std::move(r), parity(k), 1, 1);
            } else {
                std::vector<int> q(n + 1);
                q[0] = n;
                for (int j = 1; j <= n - 2; ++j) q[j] = n - j;
                q[n - 1] = 0;
                q[n] = 1;
                add(std::move(q), parity(k), 1, 1);
                std::vector<int> r(n + 1);
                r[0] = n - 1;
                r[1] = n;
                for (int j = 2; j <= n - 1; ++j) r[j] = n - j;
                r[n] = 0;
                add(std::move(r), parity(k), 1, 1);
            }
            break;
        }
        case Family::E:
            if (n == 6) {
                add({1, 5, 4, 3, 6, 0, 2}, 1, 1, 1);
                add({5, 0, 6, 3, 2, 1, 4}, 1, 1, 1);
            } else if (n == 7) {
                add({6, 5, 4, 3, 2, 1, 0, 7}, -1, 1, 1);
            }
            break;
        case Family::F:
        case Family::G:
            break;
    }
    return gens;
}

}  // namespace

GammaGroup::GammaGroup(const RootSystemData& R) {
    const int n = R.rank;
    GammaElement id;
    id.perm.resize(n + 1);
    for (int i = 0; i <= n; ++i) id.perm[i] = i;
    elems_.push_back(id);

    std::map<std::vector<int>, std::size_t> seen;
    seen.emplace(id.perm, 0);
    std::vector<GammaElement> gens = generators(R);

    for (std::size_t head = 0; head < elems_.size(); ++head)
        for (const GammaElement& g : gens) {
            GammaElement next = compose(elems_[head], g);
            auto it = seen.find(next.perm);
            if (it != seen.end()) {
                const GammaElement& prev = elems_[it->second];
                if (prev.sign_det != next.sign_det || prev.sign_short != next.sign_short ||
                    prev.sign_long != next.sign_long)
                    fail(ErrorCode::Internal, "inconsistent diagram-symmetry signs");
                continue;
            }
            seen.emplace(next.perm, elems_.size());
            elems_.push_back(std::move(next));
        }

    if (static_cast<Int>(elems_.size()) != R.connection_index)
        fail(ErrorCode::Internal, "diagram symmetry group has wrong order");

    // Each relabelling must preserve the node weights (comark 1 at the
    // extending node) and commute with the rest of the group.
    IntVec mv = R.comarks;
    mv[0] = 1;
    for (const GammaElement& g : elems_) {
        for (int i = 0; i <= n; ++i)
            if (mv[g.perm[i]] != mv[i])
                fail(ErrorCode::Internal, "diagram symmetry does not preserve node weights");
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (R.dual_ext_cartan[g.perm[i]][g.perm[j]] != R.dual_ext_cartan[i][j])
                    fail(ErrorCode::Internal, "diagram symmetry is not a diagram automorphism");
        for (const GammaElement& h : elems_) {
            GammaElement gh = compose(g, h);
            GammaElement hg = compose(h, g);
            if (gh.perm != hg.perm)
                fail(ErrorCode::Internal, "diagram symmetry group is not abelian");
        }
    }
}

IntVec GammaGroup::act(const GammaElement& g, const IntVec& kac) {
    IntVec out(kac.size());
    for (std::size_t j = 0; j < kac.size(); ++j) out[j] = kac[g.perm[j]];
    return out;
}

Int GammaGroup::stab_order(const IntVec& kac) const {
    Int s = 0;
    for (const GammaElement& g : elems_)
        if (act(g, kac) == kac) ++s;
    return s;
}

IntVec GammaGroup::lex_max(const IntVec& kac) const {
    IntVec best = kac;
    for (const GammaElement& g : elems_) best = std::max(best, act(g, kac));
    return best;
}

bool GammaGroup::is_lex_max(const IntVec& kac) const {
    for (const GammaElement& g : elems_)
        if (act(g, kac) > kac) return false;
    return true;
}

bool GammaGroup::stab_has_negative_sign(const IntVec& kac, SignHom sigma) const {
    for (const GammaElement& g : elems_)
        if (g.sign(sigma) == -1 && act(g, kac) == kac) return true;
    return false;
}

Int h_weight(const RootSystemData& R, const GammaGroup& G, const IntVec& kac) {
    return dual_stab_order(R, kac) * G.stab_order(kac);
}

}  // namespace weyldft
