#include "eqbif/torusrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "eqbif/errors.hpp"

namespace eqbif {

Weight sign_canonical(Weight w) {
  auto it = std::find_if(w.begin(), w.end(), [](std::int64_t x) { return x != 0; });
  if (it != w.end() && *it < 0)
    for (auto& x : w) x = -x;
  return w;
}

bool is_zero_weight(std::span<const std::int64_t> w) {
  return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
}

TorusRep::TorusRep(std::size_t ambient_rank, std::int64_t trivial_mult)
    : ambient_rank_(ambient_rank), trivial_mult_(trivial_mult) {
  if (trivial_mult < 0) {
    throw InputError(ErrorCode::kMalformedInput, "negative trivial multiplicity");
  }
}

TorusRep TorusRep::irreducible(Weight m, std::int64_t k) {
  TorusRep v(m.size());
  v.add(std::move(m), k);
  return v;
}

std::int64_t TorusRep::dim() const {
  std::int64_t d = trivial_mult_;
  for (const auto& [m, k] : weights_) d += 2 * k;
  return d;
}

std::int64_t TorusRep::multiplicity(const Weight& m) const {
  if (is_zero_weight(m)) return trivial_mult_;
  auto it = weights_.find(sign_canonical(m));
  return it == weights_.end() ? 0 : it->second;
}

void TorusRep::add(Weight m, std::int64_t k) {
  if (m.size() != ambient_rank_) {
    throw InputError(ErrorCode::kLengthMismatch,
                     "weight of length " + std::to_string(m.size()) +
                         " for T^" + std::to_string(ambient_rank_));
  }
  if (k < 0) throw InputError(ErrorCode::kMalformedInput, "negative multiplicity");
  if (k == 0) return;
  if (is_zero_weight(m)) {
    trivial_mult_ += k;
    return;
  }
  weights_[sign_canonical(std::move(m))] += k;
}

std::string TorusRep::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (trivial_mult_ > 0) {
    os << "R[" << trivial_mult_ << ",0]";
    first = false;
  }
  for (const auto& [m, k] : weights_) {
    if (!first) os << " + ";
    first = false;
    os << "R[" << k << ",(";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ")]";
  }
  if (first) os << "0";
  return os.str();
}

TorusRep direct_sum(const TorusRep& v, const TorusRep& w) {
  if (v.ambient_rank() != w.ambient_rank()) {
    throw InputError(ErrorCode::kRankMismatch,
                     "direct sum of T^" + std::to_string(v.ambient_rank()) +
                         " and T^" + std::to_string(w.ambient_rank()) +
                         " representations");
  }
  TorusRep out = v;
  out.add(Weight(v.ambient_rank(), 0), w.trivial_mult());
  for (const auto& [m, k] : w.weights()) out.add(m, k);
  return out;
}

TorusRep tensor(const TorusRep& w, const TorusRep& v, TensorRule rule) {
  const std::size_t r = w.ambient_rank();
  const std::size_t l = v.ambient_rank();
  TorusRep out(r + l, w.trivial_mult() * v.trivial_mult());

  auto join = [&](const Weight& m, const Weight& n, bool flip_n) {
    Weight mn(m);
    for (auto x : n) mn.push_back(flip_n ? -x : x);
    return mn;
  };
  const Weight zero_r(r, 0), zero_l(l, 0);

  for (const auto& [m, km] : w.weights())
    out.add(join(m, zero_l, false), km * v.trivial_mult());
  for (const auto& [n, kn] : v.weights())
    out.add(join(zero_r, n, false), w.trivial_mult() * kn);
  for (const auto& [m, km] : w.weights())
    for (const auto& [n, kn] : v.weights()) {
      out.add(join(m, n, false), km * kn);
      out.add(join(m, n, rule == TensorRule::kStandard), km * kn);
    }
  return out;
}

double character(const TorusRep& v, std::span<const Rational> q) {
  if (q.size() != v.ambient_rank()) {
    throw InputError(ErrorCode::kLengthMismatch,
                     "angle vector of length " + std::to_string(q.size()) +
                         " for T^" + std::to_string(v.ambient_rank()));
  }
  double value = static_cast<double>(v.trivial_mult());
  for (const auto& [m, k] : v.weights()) {
    // Reduce ⟨m,q⟩ mod 1 exactly before going to floating point.
    Rational pairing = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      pairing += Rational(static_cast<long>(m[i])) * q[i];
    pairing.canonicalize();
    Integer whole;
    mpz_fdiv_q(whole.get_mpz_t(), pairing.get_num_mpz_t(), pairing.get_den_mpz_t());
    pairing -= whole;
    value += 2.0 * static_cast<double>(k) *
             std::cos(2.0 * std::numbers::pi * pairing.get_d());
  }
  return value;
}

}  // namespace eqbif
