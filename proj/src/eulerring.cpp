#include "eqbif/eulerring.hpp"

#include <sstream>

#include "eqbif/errors.hpp"

namespace eqbif {

EulerElement::EulerElement(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank) {}

EulerElement EulerElement::unit(std::size_t r) {
  return generator(TorusSubgroup(r));
}

EulerElement EulerElement::generator(const TorusSubgroup& h, const Integer& c) {
  EulerElement x(h.ambient_rank());
  x.add_term(h, c);
  return x;
}

Integer EulerElement::coefficient(const TorusSubgroup& h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer EulerElement::unit_coefficient() const {
  return coefficient(TorusSubgroup(ambient_rank_));
}

void EulerElement::add_term(const TorusSubgroup& h, const Integer& c) {
  if (h.ambient_rank() != ambient_rank_) {
    throw InputError(ErrorCode::kRankMismatch,
                     "generator of U(T^" + std::to_string(h.ambient_rank()) +
                         ") added to element of U(T^" +
                         std::to_string(ambient_rank_) + ")");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(h, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void EulerElement::check_rank(const EulerElement& other) const {
  if (other.ambient_rank_ != ambient_rank_) {
    throw InputError(ErrorCode::kRankMismatch,
                     "U(T^" + std::to_string(ambient_rank_) + ") vs U(T^" +
                         std::to_string(other.ambient_rank_) + ")");
  }
}

EulerElement& EulerElement::operator+=(const EulerElement& other) {
  check_rank(other);
  for (const auto& [h, c] : other.terms_) add_term(h, c);
  return *this;
}

EulerElement& EulerElement::operator-=(const EulerElement& other) {
  check_rank(other);
  for (const auto& [h, c] : other.terms_) add_term(h, -c);
  return *this;
}

EulerElement EulerElement::operator-() const {
  EulerElement out(ambient_rank_);
  for (const auto& [h, c] : terms_) out.terms_.emplace(h, -c);
  return out;
}

EulerElement operator*(const Integer& c, const EulerElement& x) {
  EulerElement out(x.ambient_rank_);
  if (c == 0) return out;
  for (const auto& [h, coeff] : x.terms_) out.terms_.emplace(h, c * coeff);
  return out;
}

std::string EulerElement::to_string() const {
  if (terms_.empty()) return "Θ";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Integer mag = abs(c);
    if (mag != 1) os << mag.get_str() << "·";
    if (h.is_full()) os << "I";
    else os << "χ(" << h.to_string() << ")";
  }
  return os.str();
}

EulerElement linear_combine(std::span<const Integer> scalars,
                            std::span<const EulerElement> elements) {
  if (scalars.size() != elements.size()) {
    throw InputError(ErrorCode::kLengthMismatch,
                     "linear_combine: " + std::to_string(scalars.size()) +
                         " scalars for " + std::to_string(elements.size()) +
                         " elements");
  }
  if (elements.empty()) {
    throw InputError(ErrorCode::kLengthMismatch,
                     "linear_combine needs at least one element");
  }
  EulerElement out(elements.front().ambient_rank());
  for (std::size_t i = 0; i < elements.size(); ++i)
    out += scalars[i] * elements[i];
  return out;
}

EulerElement star(const EulerElement& a, const EulerElement& b, StarRule rule) {
  if (a.ambient_rank() != b.ambient_rank()) {
    throw InputError(ErrorCode::kRankMismatch,
                     "star of U(T^" + std::to_string(a.ambient_rank()) +
                         ") and U(T^" + std::to_string(b.ambient_rank()) + ")");
  }
  const std::size_t r = a.ambient_rank();
  EulerElement out(r);
  for (const auto& [h, c] : a.terms())
    for (const auto& [h2, c2] : b.terms()) {
      TorusSubgroup both = subgroup_intersect(h, h2);
      // dim H + dim H' <= r + dim(H∩H') always; equality keeps the term.
      bool transversal = h.dim() + h2.dim() == r + both.dim();
      if (rule == StarRule::kFlippedDimension) transversal = !transversal;
      if (transversal) out.add_term(both, c * c2);
    }
  return out;
}

EulerElement deg_minus_id(const TorusRep& v, StarRule rule) {
  const std::size_t r = v.ambient_rank();
  EulerElement out = EulerElement::unit(r);
  if (v.trivial_mult() % 2 == 1) out = -out;
  const EulerElement unit = EulerElement::unit(r);
  for (const auto& [m, k] : v.weights()) {
    EulerElement factor =
        unit - EulerElement::generator(subgroup_canonical(r, {to_int_vector(m)}));
    for (std::int64_t i = 0; i < k; ++i) out = star(out, factor, rule);
  }
  return out;
}

EulerElement codim_part(const EulerElement& x, std::size_t c) {
  EulerElement out(x.ambient_rank());
  for (const auto& [h, coeff] : x.terms())
    if (h.codim() == c) out.add_term(h, coeff);
  return out;
}

EulerElement lift(const EulerElement& x, std::size_t l) {
  EulerElement out(x.ambient_rank() + l);
  for (const auto& [h, c] : x.terms()) out.add_term(extend_by_full_torus(h, l), c);
  return out;
}

}  // namespace eqbif
