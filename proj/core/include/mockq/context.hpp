#pragma once

#include <cstdint>

#include "mockq/numeric.hpp"

namespace mockq {

struct QSettings {
  int max_terms = 4000;
  double tol = 1e-16;
  // 0 selects the per-operation default radius.
  double contour_radius = 0.0;
  int contour_points = 64;
  std::uint64_t seed = 1;
  // Adaptive sums keep going until they have used truncation_scale times
  // the number of terms the stopping rule asked for. 2 is the
  // doubled-truncation oracle.
  int truncation_scale = 1;
};

/// Evaluation environment: the nome plus truncation and quadrature settings.
/// Construction enforces |q| < 1, tol > 0, max_terms >= 8, contour_points >= 16.
class QContext {
 public:
  explicit QContext(cplx q, QSettings settings = {});

  cplx q() const { return q_; }
  const QSettings& settings() const { return settings_; }

  int max_terms() const { return settings_.max_terms; }
  double tol() const { return settings_.tol; }
  double contour_radius() const { return settings_.contour_radius; }
  int contour_points() const { return settings_.contour_points; }
  std::uint64_t seed() const { return settings_.seed; }
  int truncation_scale() const { return settings_.truncation_scale; }

  /// Same settings, different nome (e.g. q^m for level-m theta and mu).
  QContext with_nome(cplx q) const;
  /// Same nome, every adaptive sum runs to twice its natural length.
  QContext with_doubled_truncation() const;
  QContext with_settings(QSettings settings) const;

 private:
  cplx q_;
  QSettings settings_;
};

}  // namespace mockq
