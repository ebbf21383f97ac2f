#pragma once

// Sparse multivariate polynomials over a fixed number of variables, stored as
// a table of (coefficient, exponent-vector) monomials.

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <vector>

namespace triso {

template <std::size_t N>
class Polynomial {
 public:
  using Exponents = std::array<int, N>;

  struct Monomial {
    double coefficient;
    Exponents exponents;
  };

  Polynomial() = default;
  Polynomial(double constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0.0) terms_[Exponents{}] = constant;
  }

  static Polynomial variable(std::size_t index) {
    Polynomial p;
    Exponents e{};
    e[index] = 1;
    p.terms_[e] = 1.0;
    return p;
  }

  static Polynomial from_monomials(std::span<const Monomial> monomials) {
    Polynomial p;
    for (const auto& m : monomials) p.add_term(m.exponents, m.coefficient);
    return p;
  }

  std::vector<Monomial> monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({c, e});
    return out;
  }

  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Largest total degree over the stored monomials (-1 for the zero polynomial).
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  double evaluate(std::span<const double, N> x) const { return evaluate_as<double>(x); }

  /// Evaluation with accumulation in type T (e.g. long double).
  template <class T>
  T evaluate_as(std::span<const double, N> x) const {
    T sum = 0;
    for (const auto& [e, c] : terms_) {
      T t = c;
      for (std::size_t v = 0; v < N; ++v)
        for (int p = 0; p < e[v]; ++p) t *= x[v];
      sum += t;
    }
    return sum;
  }

  /// Exact partial derivative with respect to variable `index`.
  Polynomial derivative(std::size_t index) const {
    Polynomial d;
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      Exponents f = e;
      f[index] -= 1;
      d.add_term(f, c * e[index]);
    }
    return d;
  }

  Polynomial pow(int n) const {
    Polynomial r(1.0);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    Polynomial r;
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e;
        for (std::size_t v = 0; v < N; ++v) e[v] = ea[v] + eb[v];
        r.add_term(e, ca * cb);
      }
    *this = std::move(r);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Exponents& e, double c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0.0) terms_.erase(it);
    } else if (c == 0.0) {
      terms_.erase(it);
    }
  }

  std::map<Exponents, double> terms_;
};

}  // namespace triso
