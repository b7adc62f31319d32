#include "freecoset/rational.hpp"

#include "freecoset/errors.hpp"

namespace freecoset {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_counts(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  mpz_class n, d;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(num), 0, 0, &num);
  mpz_import(d.get_mpz_t(), 1, 1, sizeof(den), 0, 0, &den);
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && t[0] == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') throw SyntaxError("malformed rational '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw SyntaxError("zero denominator in '" + s + "'");
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_row_stochastic() const {
  const Rational one(1);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational sum;
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c).sign() < 0) return false;
      sum += (*this)(r, c);
    }
    if (sum != one) return false;
  }
  return true;
}

bool RationalMatrix::is_doubly_stochastic() const {
  return is_square() && is_row_stochastic() && transpose().is_row_stochastic();
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  mpq_class acc, tmp;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const mpq_class& x = a(r, k).raw();
        if (sgn(x) == 0) continue;
        tmp = x * b(k, c).raw();
        acc += tmp;
      }
      out(r, c) = Rational(acc);
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
  RationalMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

}  // namespace freecoset
