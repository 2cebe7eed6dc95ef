#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "qdst/frame.hpp"

namespace qdst {

using amplitude = std::complex<double>;

inline double magnitude_sq(amplitude a) { return std::norm(a); }

/// Angular phase in [0, pi/2] for first-quadrant amplitudes; 0 for a zero amplitude.
inline double phase_of(amplitude a) {
  if (a.real() == 0.0 && a.imag() == 0.0) return 0.0;
  return std::atan2(a.imag(), a.real());
}

inline constexpr double qmf_sum_tolerance = 1e-9;
inline constexpr double classical_sum_tolerance = 1e-12;

struct mass_entry {
  focal_set set = 0;
  amplitude amp{0.0, 0.0};
};

struct classical_entry {
  focal_set set = 0;
  double mass = 0.0;
};

namespace detail {

inline void sort_by_set(std::vector<mass_entry>& es) {
  std::sort(es.begin(), es.end(), [](const mass_entry& a, const mass_entry& b) {
    return a.set < b.set;
  });
}

inline void sort_by_set(std::vector<classical_entry>& es) {
  std::sort(es.begin(), es.end(), [](const classical_entry& a, const classical_entry& b) {
    return a.set < b.set;
  });
}

}  // namespace detail

/// Quantum mass function: complex amplitudes on non-empty focal sets, with
/// squared magnitudes summing to one. Immutable after construction.
class quantum_mass {
 public:
  quantum_mass() = default;

  const frame& domain() const { return frame_; }
  const std::vector<mass_entry>& entries() const { return entries_; }
  std::size_t focal_count() const { return entries_.size(); }

  amplitude at(focal_set s) const {
    for (const auto& e : entries_)
      if (e.set == s) return e.amp;
    return amplitude{0.0, 0.0};
  }

  bool singleton_only() const {
    for (const auto& e : entries_)
      if (set_cardinality(e.set) != 1) return false;
    return true;
  }

  /// Union of all focal sets (the support of the evidence).
  focal_set support_union() const {
    focal_set u = 0;
    for (const auto& e : entries_) u |= e.set;
    return u;
  }

  double squared_total() const {
    double t = 0.0;
    for (const auto& e : entries_) t += magnitude_sq(e.amp);
    return t;
  }

  friend bool operator==(const quantum_mass& a, const quantum_mass& b) {
    if (a.frame_ != b.frame_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      if (a.entries_[i].set != b.entries_[i].set || a.entries_[i].amp != b.entries_[i].amp)
        return false;
    return true;
  }

  /// Trusted path for combination/fusion outputs: entries must already be
  /// sorted, non-empty, first-quadrant and normalized; violations indicate a
  /// bug upstream, not bad user input.
  static quantum_mass from_normalized(frame f, std::vector<mass_entry> entries) {
    quantum_mass qm;
    qm.frame_ = std::move(f);
    qm.entries_ = std::move(entries);
    detail::sort_by_set(qm.entries_);
    double t = 0.0;
    for (const auto& e : qm.entries_) {
      if (e.set == 0 || !qm.frame_.contains(e.set))
        throw error(errc::internal, "focal set outside frame");
      if (e.amp.real() < 0.0 || e.amp.imag() < 0.0)
        throw error(errc::internal, "amplitude left the first quadrant");
      t += magnitude_sq(e.amp);
    }
    if (std::abs(t - 1.0) > qmf_sum_tolerance)
      throw error(errc::internal, "squared magnitudes sum to " + std::to_string(t));
    return qm;
  }

 private:
  frame frame_;
  std::vector<mass_entry> entries_;
};

/// Classical basic probability assignment on non-empty focal sets.
class classical_mass {
 public:
  classical_mass() = default;

  classical_mass(frame f, std::vector<classical_entry> entries)
      : frame_(std::move(f)), entries_(std::move(entries)) {
    detail::sort_by_set(entries_);
    double t = 0.0;
    focal_set prev = 0;
    for (const auto& e : entries_) {
      if (e.set == 0) throw_input(errc::empty_focal, "mass on the empty set");
      if (!frame_.contains(e.set)) throw_input(errc::bad_input, "focal set outside frame");
      if (e.mass < 0.0) throw_input(errc::negative_component, "negative mass");
      if (e.set == prev) throw_input(errc::duplicate_focal, "duplicate focal set");
      prev = e.set;
      t += e.mass;
    }
    if (std::abs(t - 1.0) > classical_sum_tolerance)
      throw_input(errc::not_normalized, "masses sum to " + std::to_string(t));
  }

  const frame& domain() const { return frame_; }
  const std::vector<classical_entry>& entries() const { return entries_; }

  double at(focal_set s) const {
    for (const auto& e : entries_)
      if (e.set == s) return e.mass;
    return 0.0;
  }

 private:
  frame frame_;
  std::vector<classical_entry> entries_;
};

/// Builds a QMF from raw (set, amplitude) pairs.
///
/// Keys must be distinct and non-empty; amplitudes must be componentwise
/// non-negative. Zero amplitudes are dropped (a focal set carries mass by
/// definition). With normalize on, amplitudes are divided by the square root
/// of the total squared magnitude, leaving phases unchanged; with normalize
/// off the squared magnitudes must already sum to one within 1e-9.
inline quantum_mass make_qmf(const frame& f, std::vector<mass_entry> raw, bool normalize) {
  detail::sort_by_set(raw);
  std::vector<mass_entry> kept;
  kept.reserve(raw.size());
  double total = 0.0;
  for (const auto& e : raw) {
    const bool zero = e.amp.real() == 0.0 && e.amp.imag() == 0.0;
    if (e.set == 0) {
      if (!zero) throw_input(errc::empty_focal, "non-zero amplitude on the empty set");
      continue;
    }
    if (!f.contains(e.set)) throw_input(errc::bad_input, "focal set outside frame");
    if (e.amp.real() < 0.0 || e.amp.imag() < 0.0)
      throw_input(errc::negative_component, "amplitude components must be non-negative");
    if (!kept.empty() && kept.back().set == e.set)
      throw_input(errc::duplicate_focal, "duplicate focal set in raw entries");
    if (zero) continue;
    kept.push_back(e);
    total += magnitude_sq(e.amp);
  }
  if (kept.empty() || total == 0.0)
    throw_input(errc::zero_total, "all amplitudes are zero");
  if (normalize) {
    const double s = std::sqrt(total);
    for (auto& e : kept) e.amp /= s;
  } else if (std::abs(total - 1.0) > qmf_sum_tolerance) {
    throw_input(errc::not_normalized,
                "squared magnitudes sum to " + std::to_string(total) + ", expected 1");
  }
  return quantum_mass::from_normalized(f, std::move(kept));
}

/// Projects a QMF to its classical shadow: each amplitude mapped to its
/// squared magnitude.
inline classical_mass squared_mass(const quantum_mass& qm) {
  std::vector<classical_entry> es;
  es.reserve(qm.focal_count());
  double t = 0.0;
  for (const auto& e : qm.entries()) {
    es.push_back({e.set, magnitude_sq(e.amp)});
    t += es.back().mass;
  }
  // Renormalize away the representation error so the classical invariant
  // (1e-12) holds even when the quantum one only held to 1e-9.
  for (auto& e : es) e.mass /= t;
  return classical_mass(qm.domain(), std::move(es));
}

namespace detail {

template <class Entries, class MassOf>
std::vector<double> pignistic_impl(const frame& f, const Entries& es, MassOf mass_of) {
  std::vector<double> p(f.size(), 0.0);
  for (const auto& e : es) {
    const double share = mass_of(e) / set_cardinality(e.set);
    for (std::size_t i = 0; i < f.size(); ++i)
      if (e.set >> i & 1u) p[i] += share;
  }
  return p;
}

}  // namespace detail

/// Pignistic transform BetP: splits each focal set's (squared) mass equally
/// among its atoms. Returns a probability vector aligned with frame atoms.
inline std::vector<double> pignistic(const quantum_mass& qm) {
  return detail::pignistic_impl(qm.domain(), qm.entries(),
                                [](const mass_entry& e) { return magnitude_sq(e.amp); });
}

inline std::vector<double> pignistic(const classical_mass& m) {
  return detail::pignistic_impl(m.domain(), m.entries(),
                                [](const classical_entry& e) { return e.mass; });
}

/// True iff every focal set is a singleton (enables O(n) conflict evaluation).
inline bool restrict_to_singletons(const quantum_mass& qm) { return qm.singleton_only(); }

/// Argmax with ties broken toward the lowest index.
inline std::size_t argmax_index(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

}  // namespace qdst
