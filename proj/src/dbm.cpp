#include "tarep/dbm.hpp"

#include <sstream>

namespace tarep {

Dbm Dbm::zero(std::size_t clocks) {
  Dbm d(clocks + 1);
  for (auto& e : d.m_) e = kLeZero;
  return d;
}

Dbm Dbm::universe(std::size_t clocks) {
  Dbm d(clocks + 1);
  for (std::size_t i = 0; i < d.dim_; ++i) {
    d.ref(i, i) = kLeZero;
    d.ref(0, i) = kLeZero;
  }
  return d;
}

bool Dbm::is_empty() const { return m_[0] < kLeZero; }

void Dbm::mark_empty() { m_[0] = raw_bound(-1, false); }

void Dbm::up() {
  if (is_empty()) return;
  for (std::size_t i = 1; i < dim_; ++i) ref(i, 0) = kInfinity;
}

void Dbm::reset(std::size_t clock) {
  if (is_empty()) return;
  for (std::size_t j = 0; j < dim_; ++j) {
    ref(clock, j) = at(0, j);
    ref(j, clock) = at(j, 0);
  }
  ref(clock, clock) = kLeZero;
}

void Dbm::constrain(std::size_t i, std::size_t j, RawBound raw) {
  if (is_empty()) return;
  if (raw >= at(i, j)) return;
  if (raw_add(raw, at(j, i)) < kLeZero) {
    mark_empty();
    return;
  }
  ref(i, j) = raw;
  // Close paths through the new edge i -> j.
  for (std::size_t a = 0; a < dim_; ++a) {
    RawBound ai = at(a, i);
    if (ai == kInfinity) continue;
    RawBound aij = raw_add(ai, raw);
    for (std::size_t b = 0; b < dim_; ++b) {
      RawBound via = raw_add(aij, at(j, b));
      if (via < at(a, b)) ref(a, b) = via;
    }
  }
  for (std::size_t a = 0; a < dim_; ++a)
    if (at(a, a) < kLeZero) {
      mark_empty();
      return;
    }
}

void Dbm::canonicalize() {
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < dim_; ++i) {
      RawBound ik = at(i, k);
      if (ik == kInfinity) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        RawBound via = raw_add(ik, at(k, j));
        if (via < at(i, j)) ref(i, j) = via;
      }
    }
  for (std::size_t i = 0; i < dim_; ++i)
    if (at(i, i) < kLeZero) {
      mark_empty();
      return;
    }
}

void Dbm::extrapolate(std::int64_t k) {
  if (is_empty()) return;
  const RawBound upper = raw_bound(k, false);
  const RawBound lower = raw_bound(-k, true);
  bool changed = false;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j) continue;
      RawBound& e = ref(i, j);
      if (e == kInfinity) continue;
      if (e > upper) {
        e = kInfinity;
        changed = true;
      } else if (e < lower) {
        e = lower;
        changed = true;
      }
    }
  if (changed) canonicalize();
}

bool Dbm::includes(const Dbm& other) const {
  if (other.is_empty()) return true;
  if (is_empty()) return false;
  for (std::size_t i = 0; i < m_.size(); ++i)
    if (other.m_[i] > m_[i]) return false;
  return true;
}

std::size_t Dbm::hash() const {
  std::size_t h = dim_;
  for (auto e : m_) h ^= std::hash<RawBound>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Dbm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) os << ' ';
      RawBound e = at(i, j);
      if (e == kInfinity) os << "inf";
      else os << (bound_strict(e) ? "<" : "<=") << bound_value(e);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tarep
