#include "ferrers/polynomial.hpp"

namespace ferrers {

TrivariatePolynomial::TrivariatePolynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, BigInt(constant));
}

TrivariatePolynomial TrivariatePolynomial::term(BigInt coefficient, Monomial m) {
  TrivariatePolynomial p;
  if (coefficient != 0) p.terms_.emplace(m, std::move(coefficient));
  return p;
}

BigInt TrivariatePolynomial::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TrivariatePolynomial::add_term(const Monomial& m, const BigInt& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TrivariatePolynomial& TrivariatePolynomial::operator+=(
    const TrivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TrivariatePolynomial& TrivariatePolynomial::operator-=(
    const TrivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TrivariatePolynomial& TrivariatePolynomial::operator*=(
    const TrivariatePolynomial& other) {
  TrivariatePolynomial product;
  BigInt c;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      c = ca * cb;
      product.add_term({ma.x + mb.x, ma.y + mb.y, ma.z + mb.z}, c);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

BigInt TrivariatePolynomial::evaluate(const BigInt& x, const BigInt& y,
                                      const BigInt& z) const {
  BigInt total = 0;
  BigInt px, py, pz;
  for (const auto& [m, c] : terms_) {
    mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), m.x);
    mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), m.y);
    mpz_pow_ui(pz.get_mpz_t(), z.get_mpz_t(), m.z);
    total += c * px * py * pz;
  }
  return total;
}

TrivariatePolynomial TrivariatePolynomial::substitute_y(const BigInt& y) const {
  TrivariatePolynomial out;
  BigInt py;
  for (const auto& [m, c] : terms_) {
    mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), m.y);
    out.add_term({m.x, 0, m.z}, c * py);
  }
  return out;
}

std::string TrivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;

    std::string vars;
    auto append = [&vars](const char* name, std::uint32_t e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    append("x", m.x);
    append("y", m.y);
    append("z", m.z);

    if (vars.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += vars;
    } else {
      out += magnitude.get_str() + "*" + vars;
    }
  }
  return out;
}

}  // namespace ferrers
