#pragma once

// Linear (conformal, affine) symplectic groups, their contact lifts, and the
// Hamiltonian / contact-Hamiltonian Lie algebras.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sympinv/jet.hpp"
#include "sympinv/polynomial.hpp"
#include "sympinv/space.hpp"

namespace sympinv {

enum class Flavor { Sp, CSp, ASp, ACSp, Contact, ContactCSp };

const char* to_string(Flavor f);
Flavor parse_flavor(const std::string& s);
inline bool is_contact(Flavor f) { return f == Flavor::Contact || f == Flavor::ContactCSp; }
inline bool is_conformal(Flavor f) { return f == Flavor::CSp || f == Flavor::ACSp || f == Flavor::ContactCSp; }
inline bool is_affine(Flavor f) { return f == Flavor::ASp || f == Flavor::ACSp; }

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

// p -> L p + b on V; the contact lift additionally sends
// z -> mu (z - x.y/2) + x'.y'/2, which rescales alpha by mu.
template <class S>
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(SymplecticSpace space, Flavor flavor, Mat<S> L, S lambda, std::vector<S> b, S mu)
      : space_(std::move(space)), flavor_(flavor), L_(std::move(L)), lambda_(lambda), b_(std::move(b)), mu_(mu) {
    if (b_.empty()) b_.assign(static_cast<std::size_t>(space_.dim()), S(0));
  }

  static GroupElement identity(const SymplecticSpace& space, Flavor flavor) {
    const int d = space.dim();
    Mat<S> L(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) L(i, j) = S(i == j ? 1 : 0);
    return GroupElement(space, flavor, L, S(1), {}, S(1));
  }

  const SymplecticSpace& space() const { return space_; }
  Flavor flavor() const { return flavor_; }
  const Mat<S>& linear() const { return L_; }
  const S& scale() const { return lambda_; }
  const std::vector<S>& translation() const { return b_; }
  const S& contact_factor() const { return mu_; }
  bool contact() const { return is_contact(flavor_); }
  int dim() const { return space_.dim() + (contact() ? 1 : 0); }

  template <class T>
  std::vector<T> apply(const std::vector<T>& p) const {
    const int d = space_.dim();
    if (static_cast<int>(p.size()) != dim()) throw Error(ErrorCode::InvalidArgument, "point dimension mismatch");
    std::vector<T> out(p.size(), T(S(0)));
    for (int i = 0; i < d; ++i) {
      T acc(b_[static_cast<std::size_t>(i)]);
      for (int j = 0; j < d; ++j)
        if (!is_zero(L_(i, j))) acc = acc + T(L_(i, j)) * p[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = acc;
    }
    if (contact()) {
      const T half(S(1) / S(2));
      out[static_cast<std::size_t>(d)] = T(mu_) * (p[static_cast<std::size_t>(d)] - half * dot_xy(p)) + half * dot_xy(out);
    }
    return out;
  }

  // (this o h)(p) = this(h(p)).
  GroupElement compose(const GroupElement& h) const {
    const int d = space_.dim();
    Mat<S> L(d, d);
    std::vector<S> b(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      S bi = b_[static_cast<std::size_t>(i)];
      for (int j = 0; j < d; ++j) {
        S acc(0);
        for (int k = 0; k < d; ++k) acc += L_(i, k) * h.L_(k, j);
        L(i, j) = acc;
        bi += L_(i, j) * h.b_[static_cast<std::size_t>(j)];
      }
      b[static_cast<std::size_t>(i)] = bi;
    }
    return GroupElement(space_, flavor_, L, lambda_ * h.lambda_, b, mu_ * h.mu_);
  }

  GroupElement inverse() const {
    const int d = space_.dim();
    std::vector<std::vector<S>> rows(static_cast<std::size_t>(d), std::vector<S>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = L_(i, j);
    const auto inv = invert_matrix(rows).inverse;
    Mat<S> Li(d, d);
    std::vector<S> b(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      S bi(0);
      for (int j = 0; j < d; ++j) {
        Li(i, j) = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        bi -= Li(i, j) * b_[static_cast<std::size_t>(j)];
      }
      b[static_cast<std::size_t>(i)] = bi;
    }
    return GroupElement(space_, flavor_, Li, S(1) / lambda_, b, S(1) / mu_);
  }

 private:
  template <class T>
  T dot_xy(const std::vector<T>& p) const {
    T acc(S(0));
    for (const auto& [q, pp] : space_.pairs()) acc = acc + p[static_cast<std::size_t>(q)] * p[static_cast<std::size_t>(pp)];
    return acc;
  }

  SymplecticSpace space_;
  Flavor flavor_ = Flavor::Sp;
  Mat<S> L_;
  S lambda_ = S(1);
  std::vector<S> b_;
  S mu_ = S(1);
};

// Defect ||A^T J A - lambda^2 J||_max of the linear part, A = L / lambda.
double symplectic_defect(const GroupElement<double>& g);

// Random element: exponential of a random Hamiltonian matrix (entries of the
// generating symmetric matrix uniform in [-1, 1]), plus a scale
// exp(U[-1/2, 1/2]) for conformal flavors and a translation in [-1, 1]^2n for
// affine flavors.
GroupElement<double> random_group_element(const SymplecticSpace& space, Flavor flavor, std::uint64_t seed);
// Exponential of a given Hamiltonian matrix M (J M + M^T J = 0).
GroupElement<double> exp_algebra(const SymplecticSpace& space, Flavor flavor, const Eigen::MatrixXd& M,
                                 double log_scale = 0.0, const std::vector<double>& translation = {});
// Exact rational Sp element: a product of unipotent symplectic shears.
GroupElement<Rational> random_rational_element(const SymplecticSpace& space, Flavor flavor, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Lie algebras.

struct AlgebraElement {
  Polynomial<double> hamiltonian;
  VectorField<double> field;
  bool contact = false;
};

// X_H = sum H_p d_q - H_q d_p. Degree <= 2 required.
AlgebraElement hamiltonian_field(const Polynomial<double>& H, const SymplecticSpace& space);
// Contact field on (x, y, z): (H - y.H_y) d_z + (H_x + y H_z) d_y - H_y d_x;
// weighted degree <= 2 with w(x) = w(y) = 1, w(z) = 2.
AlgebraElement contact_hamiltonian_field(const Polynomial<double>& H, const ContactSpace& space);

Polynomial<double> poisson_bracket(const Polynomial<double>& f, const Polynomial<double>& g, const SymplecticSpace& space);
Polynomial<double> lagrange_bracket(const Polynomial<double>& f, const Polynomial<double>& g, const ContactSpace& space);

// Hamiltonians spanning the algebra of a flavor (quadratic monomials, plus the
// radial generator for conformal and linear monomials for affine flavors).
std::vector<Polynomial<double>> algebra_hamiltonians(const SymplecticSpace& space, Flavor flavor);
// Basis vector fields on the space (dimension 2n, or 2n+1 for contact flavors).
std::vector<VectorField<double>> algebra_basis(const SymplecticSpace& space, Flavor flavor);

}  // namespace sympinv
