#pragma once

#include <complex>
#include <memory>

#include "gamma.hpp"
#include "grids.hpp"
#include "weyl.hpp"

namespace weyldft {

using Complex = std::complex<double>;

constexpr Int kDefaultWeylCap = 1'000'000;
constexpr Int kMatrixEntryCap = 100'000'000;

// One discretization: the sampling grid, the frequency labels, the
// enumerated Weyl group and the shared M-th root-of-unity table.  All
// state is immutable after construction, so a single Transform can be
// used concurrently.
class Transform {
public:
    Transform(const RootSystemData& R, SignHom sigma, Int M, Int weyl_cap = kDefaultWeylCap,
              bool relaxed = false);

    const RootSystemData& root_data() const { return R_; }
    SignHom sigma() const { return sigma_; }
    Int level() const { return M_; }
    const PointSet& grid() const { return F_; }
    const WeightSet& labels() const { return L_; }
    const WeylGroup& weyl() const { return *W_; }

    // phi^sigma_lambda(s) for the li-th label and si-th grid point, and
    // the cas-kernel counterpart zeta.
    Complex basis(std::size_t li, std::size_t si) const;
    double basis_cas(std::size_t li, std::size_t si) const;

    // Same orbit sum for an arbitrary integer label in omega coordinates
    // (used for the label-symmetry and vanishing identities).
    Complex eval_label(const IntVec& lambda, std::size_t si) const;

    // Orbit sum at an arbitrary rational point given by alpha-check
    // coordinates.
    Complex eval_label_at(const IntVec& lambda, const RatVec& a) const;

    // Squared norm of the li-th basis function: |W| M^n h(lambda).
    double norm(std::size_t li) const;

    // sum_s eps(s) f(s) conj(g(s)); throws GridMismatch on length
    // mismatch.
    Complex scalar_product(const std::vector<Complex>& f, const std::vector<Complex>& g) const;

    std::vector<Complex> forward(const std::vector<Complex>& f) const;
    std::vector<Complex> inverse(const std::vector<Complex>& c) const;
    std::vector<double> hartley_forward(const std::vector<double>& f) const;
    std::vector<double> hartley_inverse(const std::vector<double>& d) const;

    // Interpolant sum_lambda c_lambda phi_lambda(a) at a rational point.
    Complex interpolate(const std::vector<Complex>& c, const RatVec& a) const;

    // Test hook: overwrite one eps value to make verification suites
    // fail on purpose.
    void corrupt_epsilon(std::size_t si, Int value);

private:
    std::vector<Complex> basis_row(std::size_t li) const;
    std::vector<Complex> label_row(const IntVec& lambda) const;

    RootSystemData R_;
    SignHom sigma_;
    Int M_;
    PointSet F_;
    WeightSet L_;
    std::shared_ptr<WeylGroup> W_;
    std::vector<Complex> roots_;  // e^{2 pi i k / M}
    bool have_matrix_ = false;
    std::vector<Complex> matrix_;  // row-major |Lambda| x |F|
};

}  // namespace weyldft
