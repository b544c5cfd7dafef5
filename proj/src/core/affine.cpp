#include "affine.hpp"

#include <algorithm>

#include "weyl.hpp"

namespace weyldft {

IntVec kac_coordinates(const RootSystemData& R, const IntVec& q, Int M) {
    const int n = R.rank;
    IntVec kac(n + 1, 0);
    Int weighted = 0;
    for (int i = 1; i <= n; ++i) {
        Int v = 0;
        for (int j = 0; j < n; ++j) v += R.cartan[i - 1][j] * q[j];
        kac[i] = v;
        weighted += R.marks[i] * v;
    }
    kac[0] = M - weighted;
    return kac;
}

namespace {

// Linear part of the reflection in the highest root, alpha-check
// coordinates: q -> q - <xi, q> xi-check, i.e. I - cvee * (marks^T C).
IntMat highest_root_reflection_q(const RootSystemData& R) {
    const int n = R.rank;
    IntMat m = identity_matrix(n);
    for (int j = 0; j < n; ++j) {
        Int row = 0;  // (marks^T C)_j = coefficient of q_j in <xi, q>
        for (int i = 1; i <= n; ++i) row += R.marks[i] * R.cartan[i - 1][j];
        for (int i = 0; i < n; ++i) m[i][j] -= R.affine_comarks[i + 1] * row;
    }
    return m;
}

}  // namespace

ReducedPoint reduce_point(const RootSystemData& R, const IntVec& q_in, Int M) {
    const int n = R.rank;
    if (static_cast<int>(q_in.size()) != n)
        fail(ErrorCode::InvalidArgument, "point has wrong dimension");
    if (M < 1) fail(ErrorCode::InvalidArgument, "grid level must be positive");

    ReducedPoint out;
    out.q = q_in;
    std::vector<int> ops;  // 0 = affine reflection, i>=1 = simple reflection i

    constexpr Int kMaxSteps = 1'000'000;
    for (Int step = 0;; ++step) {
        if (step > kMaxSteps) fail(ErrorCode::Internal, "point reduction did not terminate");
        IntVec kac = kac_coordinates(R, out.q, M);
        int worst = -1;
        Int worst_val = 0;
        for (int i = 0; i <= n; ++i)
            if (kac[i] < worst_val) {
                worst = i;
                worst_val = kac[i];
            }
        if (worst < 0) {
            out.kac = std::move(kac);
            break;
        }
        if (worst == 0) {
            for (int i = 0; i < n; ++i) out.q[i] += kac[0] * R.affine_comarks[i + 1];
        } else {
            out.q[worst - 1] -= kac[worst];
        }
        ops.push_back(worst);
    }

    // Recover the group element: each op is an involutive affine map g_t
    // with q_before = g_t(q_after), so q_in = (g_1 o ... o g_T)(q_F).
    IntMat rxi = highest_root_reflection_q(R);
    IntMat G = identity_matrix(n);
    IntVec u(n, 0);
    IntMat W = identity_matrix(n);
    for (int op : ops) {
        const IntMat& L = op == 0 ? rxi : reflection_matrix_q(R, op);
        IntVec v(n, 0);
        if (op == 0)
            for (int i = 0; i < n; ++i) v[i] = M * R.affine_comarks[i + 1];
        // (G, u) o (L, v) = (G L, G v + u)
        IntVec gv = mat_vec(G, v);
        for (int i = 0; i < n; ++i) u[i] += gv[i];
        G = mat_mul(G, L);

        // Omega-coordinate matrix of the same finite part: transpose of
        // the inverse of G; with involutive factors this is the forward
        // product of the transposed linear parts.
        IntMat Lt(n, IntVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) Lt[i][j] = L[j][i];
        W = mat_mul(W, Lt);

        out.sign_det = -out.sign_det;
        if (op == 0 || !R.is_short(op)) {
            if (!R.simply_laced()) out.sign_long = -out.sign_long;
        } else {
            out.sign_short = -out.sign_short;
        }
    }
    out.w_q = std::move(G);
    out.w_omega = std::move(W);
    out.shift.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (u[i] % M != 0) fail(ErrorCode::Internal, "non-lattice translation in reduction");
        out.shift[i] = u[i] / M;
    }
    return out;
}

namespace {

void validate_kac(const RootSystemData& R, const IntVec& kac, Int M, const IntVec& weights,
                  const char* side) {
    const int n = R.rank;
    if (static_cast<int>(kac.size()) != n + 1)
        fail(ErrorCode::MalformedKac,
             std::string(side) + " label needs " + std::to_string(n + 1) + " coordinates");
    Int level = kac[0];
    for (int i = 0; i <= n; ++i)
        if (kac[i] < 0)
            fail(ErrorCode::MalformedKac, std::string(side) + " label has a negative coordinate");
    for (int i = 1; i <= n; ++i) level += weights[i] * kac[i];
    if (level != M)
        fail(ErrorCode::MalformedKac, std::string(side) + " label has level " +
                                          std::to_string(level) + ", expected " +
                                          std::to_string(M));
}

}  // namespace

void validate_point_kac(const RootSystemData& R, const IntVec& kac, Int M) {
    validate_kac(R, kac, M, R.marks, "point");
}

void validate_weight_kac(const RootSystemData& R, const IntVec& kac, Int M) {
    validate_kac(R, kac, M, R.comarks, "weight");
}

namespace {

Int small_factorial(Int k) {
    Int r = 1;
    for (Int i = 2; i <= k; ++i) r *= i;
    return r;
}

// Order of the Weyl group of one connected subdiagram, identified from
// its shape.  Only diagrams that can occur as proper subdiagrams of an
// extended diagram are handled.
Int component_order(const IntMat& ext, const std::vector<int>& comp) {
    const int k = static_cast<int>(comp.size());
    if (k == 1) return 2;

    std::vector<std::vector<int>> adj(k);
    int edges = 0;
    int double_edges = 0, triple_edges = 0;
    int double_a = -1;  // local endpoints of the (unique) double edge
    int double_b = -1;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            Int p = ext[comp[a]][comp[b]] * ext[comp[b]][comp[a]];
            if (p == 0) continue;
            adj[a].push_back(b);
            adj[b].push_back(a);
            ++edges;
            if (p == 2) {
                ++double_edges;
                double_a = a;
                double_b = b;
            } else if (p == 3) {
                ++triple_edges;
            } else if (p != 1) {
                fail(ErrorCode::Internal, "unexpected bond multiplicity in subdiagram");
            }
        }
    if (edges != k - 1) fail(ErrorCode::Internal, "cyclic subdiagram");

    if (triple_edges > 0) {
        if (k == 2 && triple_edges == 1 && double_edges == 0) return 12;
        fail(ErrorCode::Internal, "unrecognized subdiagram with triple bond");
    }
    if (double_edges > 1) fail(ErrorCode::Internal, "subdiagram with two double bonds");

    auto degree = [&](int a) { return static_cast<int>(adj[a].size()); };
    int max_deg = 0;
    for (int a = 0; a < k; ++a) max_deg = std::max(max_deg, degree(a));

    if (double_edges == 1) {
        if (max_deg > 2) fail(ErrorCode::Internal, "branched subdiagram with double bond");
        // Path; locate the double edge by the distance of its endpoints
        // from the nearer path end.
        bool at_end = degree(double_a) == 1 || degree(double_b) == 1;
        if (at_end) return small_factorial(k) * (Int(1) << k);
        if (k == 4) return 1152;
        fail(ErrorCode::Internal, "interior double bond in subdiagram");
    }

    // Simply laced component.
    if (max_deg <= 2) return small_factorial(k + 1);
    if (max_deg > 3) fail(ErrorCode::Internal, "subdiagram node of degree 4");
    int branch = -1;
    int branch_count = 0;
    for (int a = 0; a < k; ++a)
        if (degree(a) == 3) {
            branch = a;
            ++branch_count;
        }
    if (branch_count != 1) fail(ErrorCode::Internal, "subdiagram with two branch nodes");
    std::vector<int> legs;
    for (int start : adj[branch]) {
        int len = 1, prev = branch, cur = start;
        while (degree(cur) == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return small_factorial(k) * (Int(1) << (k - 1));
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 2) return 51840;
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 3) return 2903040;
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 4) return 696729600;
    fail(ErrorCode::Internal, "unrecognized branched subdiagram");
}

}  // namespace

Int subdiagram_weyl_order(const IntMat& ext, const std::vector<int>& nodes) {
    const int total = static_cast<int>(ext.size());
    std::vector<int> comp_of(total, -1);
    Int order = 1;
    std::vector<char> in_set(total, 0);
    for (int i : nodes) in_set[i] = 1;
    for (int i : nodes) {
        if (comp_of[i] >= 0) continue;
        // Flood-fill one component.
        std::vector<int> comp{i};
        comp_of[i] = i;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            int a = comp[head];
            for (int b = 0; b < total; ++b)
                if (in_set[b] && comp_of[b] < 0 && ext[a][b] != 0) {
                    comp_of[b] = i;
                    comp.push_back(b);
                }
        }
        order *= component_order(ext, comp);
    }
    return order;
}

Int point_stab_order(const RootSystemData& R, const IntVec& kac) {
    std::vector<int> zero;
    for (int i = 0; i <= R.rank; ++i)
        if (kac[i] == 0) zero.push_back(i);
    return subdiagram_weyl_order(R.ext_cartan, zero);
}

Int epsilon(const RootSystemData& R, const IntVec& kac) {
    Int stab = point_stab_order(R, kac);
    if (R.weyl_order % stab != 0) fail(ErrorCode::Internal, "stabilizer order does not divide |W|");
    return R.weyl_order / stab;
}

Int dual_stab_order(const RootSystemData& R, const IntVec& kac) {
    std::vector<int> zero;
    for (int i = 0; i <= R.rank; ++i)
        if (kac[i] == 0) zero.push_back(i);
    return subdiagram_weyl_order(R.dual_ext_cartan, zero);
}

}  // namespace weyldft
