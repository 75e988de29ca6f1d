#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spherical/execution.hpp"
#include "spherical/preference.hpp"

namespace spherical {

/// One observed comparison: `better` was (weakly or strictly) chosen over `worse`.
template <class T>
struct Comparison {
  Vec<T> better;
  Vec<T> worse;
};

/// Finite revealed relations: weak (R) and strict (P).
template <class T>
struct ObservationSet {
  std::size_t dimension = 0;
  std::vector<Comparison<T>> weak;
  std::vector<Comparison<T>> strict;

  std::size_t size() const { return weak.size() + strict.size(); }
  /// Throws DimensionMismatch if any point has the wrong dimension.
  void validate() const;
};

enum class Restriction { None, Linear, Euclidean, AntiEuclidean };
const char* to_string(Restriction r);

/// Nonnegative weights on observations (plus, under a Euclidean or anti-Euclidean
/// restriction, on the sign row of c) summing to one, with positive strict mass, under
/// which every rationalizing inequality sums to zero.
template <class T>
struct Certificate {
  std::vector<T> weak_weights;
  std::vector<T> strict_weights;
  T sign_weight{0};
  T pmass{0};
};

template <class T>
struct RationalizabilityVerdict {
  bool rationalizable = false;
  Restriction restriction = Restriction::None;
  T epsilon{0};                        // optimal strict margin over the box
  std::optional<T> sign_margin;        // optimal delta with |c| >= delta, signed restrictions only
  std::optional<SphericalParams<T>> witness;
  std::optional<Certificate<T>> certificate;
  std::optional<std::string> note;
};

/// Decides rationalizability by maximising the strict margin epsilon over
/// c (x.x - y.y) + u.(x - y) >= 0 (weak) / >= epsilon (strict), with c, u, epsilon boxed.
template <class T>
RationalizabilityVerdict<T> rationalize(const ObservationSet<T>& data);

/// As `rationalize`, within one preference class: c = 0, c < 0, or c > 0.
template <class T>
RationalizabilityVerdict<T> rationalize_restricted(const ObservationSet<T>& data, Restriction restriction);

/// Maximises the strict mass of lambda over the simplex subject to
/// sum lambda (x.x - y.y) = 0 and sum lambda (x - y) = 0 (suitably modified for a
/// restriction). The data are rationalizable iff the optimal pmass is zero.
template <class T>
Certificate<T> certificate_lp(const ObservationSet<T>& data, Restriction restriction = Restriction::None);

/// Re-checks every observation against the witness utility (and the class restriction).
template <class T>
bool witness_valid(const ObservationSet<T>& data, const SphericalParams<T>& witness,
                   Restriction restriction = Restriction::None);

/// Checks the simplex, positive strict mass, and both weighted-sum identities.
template <class T>
bool certificate_valid(const ObservationSet<T>& data, const Certificate<T>& certificate,
                       Restriction restriction = Restriction::None);

/// Uniform pairs from the box [-radius, radius]^n, oriented by `params`. Ties go to the
/// weak relation in both orientations. Rationalizable by `params` by construction.
template <class T>
ObservationSet<T> generate_dataset(const SphericalParams<T>& params, std::size_t count, std::uint64_t seed,
                                   double radius);

/// Solves independent datasets; verdicts are returned in input order.
template <class T>
std::vector<RationalizabilityVerdict<T>> rationalize_all(std::span<const ObservationSet<T>> datasets,
                                                         Restriction restriction, Execution execution);

}  // namespace spherical
