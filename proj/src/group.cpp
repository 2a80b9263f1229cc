#include "sympinv/group.hpp"

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

namespace sympinv {

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::Sp: return "sp";
    case Flavor::CSp: return "csp";
    case Flavor::ASp: return "asp";
    case Flavor::ACSp: return "acsp";
    case Flavor::Contact: return "contact";
    case Flavor::ContactCSp: return "contact-csp";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  for (Flavor f : {Flavor::Sp, Flavor::CSp, Flavor::ASp, Flavor::ACSp, Flavor::Contact, Flavor::ContactCSp})
    if (s == to_string(f)) return f;
  throw Error(ErrorCode::InvalidArgument, "unknown flavor '" + s + "'");
}

double symplectic_defect(const GroupElement<double>& g) {
  const Eigen::MatrixXd A = g.linear() / g.scale();
  const Eigen::MatrixXd& J = g.space().J();
  return (A.transpose() * J * A - J).cwiseAbs().maxCoeff();
}

GroupElement<double> exp_algebra(const SymplecticSpace& space, Flavor flavor, const Eigen::MatrixXd& M, double log_scale,
                                 const std::vector<double>& translation) {
  const Eigen::MatrixXd A = M.exp();
  const double lambda = std::exp(log_scale);
  return GroupElement<double>(space, flavor, lambda * A, lambda, translation, lambda * lambda);
}

namespace {

double uniform(std::mt19937_64& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

}  // namespace

GroupElement<double> random_group_element(const SymplecticSpace& space, Flavor flavor, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int d = space.dim();
  Eigen::MatrixXd S(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) S(i, j) = S(j, i) = uniform(rng, -1, 1);
  // omega(X u, v) + omega(u, X v) = 0  <=>  X = J^{-1} S with S symmetric.
  const Eigen::MatrixXd M = space.J().inverse() * S;
  const double log_scale = is_conformal(flavor) ? uniform(rng, -0.5, 0.5) : 0.0;
  std::vector<double> b;
  if (is_affine(flavor))
    for (int i = 0; i < d; ++i) b.push_back(uniform(rng, -1, 1));
  return exp_algebra(space, flavor, M, log_scale, b);
}

GroupElement<Rational> random_rational_element(const SymplecticSpace& space, Flavor flavor, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int d = space.dim();
  auto g = GroupElement<Rational>::identity(space, flavor);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const auto& pairs = space.pairs();
  for (int step = 0; step < 6; ++step) {
    // Shear I + c E with E = J^{-1} S, S supported on the q-block or the p-block: E^2 = 0.
    Mat<Rational> L(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) L(i, j) = Rational(i == j ? 1 : 0);
    const bool q_block = step % 2 == 0;
    const int a = rnd(0, space.n() - 1), b = rnd(0, space.n() - 1);
    const Rational c(rnd(-4, 4), rnd(1, 3));
    // Hamiltonian c * s_a s_b: X = H_p d_q - H_q d_p.
    const int ia = q_block ? pairs[static_cast<std::size_t>(a)].first : pairs[static_cast<std::size_t>(a)].second;
    const int ib = q_block ? pairs[static_cast<std::size_t>(b)].first : pairs[static_cast<std::size_t>(b)].second;
    const int ta = q_block ? pairs[static_cast<std::size_t>(a)].second : pairs[static_cast<std::size_t>(a)].first;
    const int tb = q_block ? pairs[static_cast<std::size_t>(b)].second : pairs[static_cast<std::size_t>(b)].first;
    const Rational sign = q_block ? Rational(-1) : Rational(1);
    L(ta, ib) += sign * c;
    L(tb, ia) += sign * c;
    g = GroupElement<Rational>(space, flavor, L, Rational(1), {}, Rational(1)).compose(g);
  }
  Rational lambda(1);
  if (is_conformal(flavor)) lambda = Rational(rnd(1, 4), rnd(1, 4));
  std::vector<Rational> b(static_cast<std::size_t>(d), Rational(0));
  if (is_affine(flavor))
    for (auto& v : b) v = Rational(rnd(-6, 6), rnd(1, 3));
  Mat<Rational> L = g.linear();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) L(i, j) *= lambda;
  return GroupElement<Rational>(space, flavor, L, lambda, b, lambda * lambda);
}

AlgebraElement hamiltonian_field(const Polynomial<double>& H, const SymplecticSpace& space) {
  if (H.nvars() != space.dim()) throw Error(ErrorCode::InvalidArgument, "Hamiltonian arity mismatch");
  if (H.degree() > 2) throw Error(ErrorCode::DegreeError, "Hamiltonian of degree > 2");
  VectorField<double> X(static_cast<std::size_t>(space.dim()), Polynomial<double>(space.dim()));
  for (const auto& [q, p] : space.pairs()) {
    X[static_cast<std::size_t>(q)] = H.diff(p);
    X[static_cast<std::size_t>(p)] = -H.diff(q);
  }
  return {H, X, false};
}

AlgebraElement contact_hamiltonian_field(const Polynomial<double>& H, const ContactSpace& space) {
  const int n = space.n(), d = space.dim(), z = space.z_index();
  if (H.nvars() != d) throw Error(ErrorCode::InvalidArgument, "contact Hamiltonian arity mismatch");
  std::vector<int> w(static_cast<std::size_t>(d), 1);
  w[static_cast<std::size_t>(z)] = 2;
  if (H.weighted_degree(w) > 2) throw Error(ErrorCode::DegreeError, "contact Hamiltonian of weighted degree > 2");
  VectorField<double> X(static_cast<std::size_t>(d), Polynomial<double>(d));
  Polynomial<double> Xz = H;
  const Polynomial<double> Hz = H.diff(z);
  for (int i = 0; i < n; ++i) {
    const auto yi = Polynomial<double>::variable(d, n + i);
    const Polynomial<double> Hy = H.diff(n + i);
    Xz = Xz - yi * Hy;
    X[static_cast<std::size_t>(n + i)] = H.diff(i) + yi * Hz;
    X[static_cast<std::size_t>(i)] = -Hy;
  }
  X[static_cast<std::size_t>(z)] = Xz;
  return {H, X, true};
}

Polynomial<double> poisson_bracket(const Polynomial<double>& f, const Polynomial<double>& g, const SymplecticSpace& space) {
  Polynomial<double> r(f.nvars());
  for (const auto& [q, p] : space.pairs()) r = r + f.diff(q) * g.diff(p) - f.diff(p) * g.diff(q);
  return r;
}

Polynomial<double> lagrange_bracket(const Polynomial<double>& f, const Polynomial<double>& g, const ContactSpace& space) {
  const int n = space.n(), d = space.dim(), z = space.z_index();
  Polynomial<double> r(d);
  for (int i = 0; i < n; ++i) {
    const auto yi = Polynomial<double>::variable(d, n + i);
    r = r + f.diff(i) * g.diff(n + i) - g.diff(i) * f.diff(n + i);
    r = r + yi * (f.diff(z) * g.diff(n + i) - g.diff(z) * f.diff(n + i));
  }
  return r + f * g.diff(z) - g * f.diff(z);
}

std::vector<Polynomial<double>> algebra_hamiltonians(const SymplecticSpace& space, Flavor flavor) {
  const int n = space.n();
  const int d = is_contact(flavor) ? 2 * n + 1 : space.dim();
  // Contact flavors use the x1..xn, y1..yn, z layout of ContactSpace.
  std::vector<Polynomial<double>> out;
  const int m = 2 * n;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Polynomial<double>::Monomial mono(static_cast<std::size_t>(d), 0);
      ++mono[static_cast<std::size_t>(i)];
      ++mono[static_cast<std::size_t>(j)];
      Polynomial<double> p(d);
      p.add_term(mono, 1.0);
      out.push_back(p);
    }
  if (is_affine(flavor))
    for (int i = 0; i < m; ++i) out.push_back(Polynomial<double>::variable(d, i));
  if (flavor == Flavor::ContactCSp) {
    Polynomial<double> I0 = 2.0 * Polynomial<double>::variable(d, 2 * n);
    for (int i = 0; i < n; ++i) I0 = I0 - Polynomial<double>::variable(d, i) * Polynomial<double>::variable(d, n + i);
    out.push_back(I0);
  }
  return out;
}

std::vector<VectorField<double>> algebra_basis(const SymplecticSpace& space, Flavor flavor) {
  std::vector<VectorField<double>> out;
  if (is_contact(flavor)) {
    const ContactSpace cs(space.n());
    for (const auto& H : algebra_hamiltonians(space, flavor)) out.push_back(contact_hamiltonian_field(H, cs).field);
    return out;
  }
  for (const auto& H : algebra_hamiltonians(space, flavor)) out.push_back(hamiltonian_field(H, space).field);
  if (is_conformal(flavor)) {
    VectorField<double> zeta;
    for (int i = 0; i < space.dim(); ++i) zeta.push_back(Polynomial<double>::variable(space.dim(), i));
    out.push_back(zeta);
  }
  return out;
}

}  // namespace sympinv
