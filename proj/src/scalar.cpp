#include "sympinv/scalar.hpp"

#include <cctype>

namespace sympinv {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZeroJet: return "DivisionByZeroJet";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BasepointMismatch: return "BasepointMismatch";
    case ErrorCode::SingularLinearPart: return "SingularLinearPart";
    case ErrorCode::OrderExhausted: return "OrderExhausted";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::GraphDegeneracy: return "GraphDegeneracy";
    case ErrorCode::NonGenericSample: return "NonGenericSample";
    case ErrorCode::FrameDegeneracy: return "FrameDegeneracy";
    case ErrorCode::DegenerateJet: return "DegenerateJet";
    case ErrorCode::NormalizationSingular: return "NormalizationSingular";
    case ErrorCode::StepDegenerate: return "StepDegenerate";
    case ErrorCode::LagrangianTangent: return "LagrangianTangent";
    case ErrorCode::DegenerateQ1: return "DegenerateQ1";
    case ErrorCode::SigmaDegenerate: return "SigmaDegenerate";
    case ErrorCode::WeightNormalizationSingular: return "WeightNormalizationSingular";
    case ErrorCode::OnZeroLevelSet: return "OnZeroLevelSet";
    case ErrorCode::AllSamplesDegenerate: return "AllSamplesDegenerate";
    case ErrorCode::IncomparableClouds: return "IncomparableClouds";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational rational_from_decimal(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool neg = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  boost::multiprecision::cpp_int mant = 0;
  int scale = 0;
  bool digits = false, dot = false;
  for (; i < n; ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mant = mant * 10 + (c - '0');
      digits = true;
      if (dot) --scale;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) throw Error(ErrorCode::SyntaxError, "malformed number '" + text + "'");
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    int e = 0;
    bool edigits = false;
    for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      e = e * 10 + (text[i] - '0');
      edigits = true;
      if (e > 4000) throw Error(ErrorCode::SyntaxError, "exponent too large in '" + text + "'");
    }
    if (!edigits) throw Error(ErrorCode::SyntaxError, "malformed exponent in '" + text + "'");
    scale += eneg ? -e : e;
  }
  if (i != n) throw Error(ErrorCode::SyntaxError, "trailing characters in number '" + text + "'");
  boost::multiprecision::cpp_int p10 = boost::multiprecision::pow(boost::multiprecision::cpp_int(10), std::abs(scale));
  Rational r = scale >= 0 ? Rational(mant * p10) : Rational(mant, p10);
  return neg ? -r : r;
}

namespace fn {

namespace {

// Exact integer k-th root of a non-negative integer, if any.
bool exact_root(const boost::multiprecision::cpp_int& v, int k, boost::multiprecision::cpp_int& out) {
  using boost::multiprecision::cpp_int;
  if (v < 0) return false;
  if (v == 0) {
    out = 0;
    return true;
  }
  cpp_int lo = 0, hi = 1;
  while (boost::multiprecision::pow(hi, static_cast<unsigned>(k)) < v) hi *= 2;
  while (lo < hi) {
    cpp_int mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) < v)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (boost::multiprecision::pow(lo, static_cast<unsigned>(k)) != v) return false;
  out = lo;
  return true;
}

Rational rational_root(const Rational& x, int k, const char* name) {
  using boost::multiprecision::cpp_int;
  const bool neg = x < 0;
  if (neg && k % 2 == 0) throw Error(ErrorCode::DomainError, std::string(name) + " of negative value");
  const Rational a = neg ? Rational(-x) : x;
  cpp_int num, den;
  if (!exact_root(boost::multiprecision::numerator(a), k, num) || !exact_root(boost::multiprecision::denominator(a), k, den))
    throw Error(ErrorCode::DomainError, std::string(name) + " is irrational in exact mode");
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational exp(const Rational& x) {
  if (x == 0) return Rational(1);
  throw Error(ErrorCode::DomainError, "exp is irrational in exact mode");
}
Rational log(const Rational& x) {
  if (x <= 0) throw Error(ErrorCode::DomainError, "log of non-positive value");
  if (x == 1) return Rational(0);
  throw Error(ErrorCode::DomainError, "log is irrational in exact mode");
}
Rational sin(const Rational& x) {
  if (x == 0) return Rational(0);
  throw Error(ErrorCode::DomainError, "sin is irrational in exact mode");
}
Rational cos(const Rational& x) {
  if (x == 0) return Rational(1);
  throw Error(ErrorCode::DomainError, "cos is irrational in exact mode");
}
Rational sqrt(const Rational& x) { return rational_root(x, 2, "sqrt"); }
Rational cbrt(const Rational& x) { return rational_root(x, 3, "cbrt"); }

}  // namespace fn

}  // namespace sympinv
