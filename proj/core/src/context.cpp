#include "mockq/context.hpp"

#include <cmath>
#include <sstream>

#include "mockq/errors.hpp"

namespace mockq {

QContext::QContext(cplx q, QSettings settings) : q_(q), settings_(settings) {
  if (!is_finite(q) || !(std::abs(q) < 1.0)) {
    std::ostringstream msg;
    msg << "nome must satisfy |q| < 1, got |q| = " << std::abs(q);
    throw DomainError(msg.str());
  }
  if (!(settings_.tol > 0.0)) throw DomainError("tol must be positive");
  if (settings_.max_terms < 8) throw DomainError("max_terms must be at least 8");
  if (settings_.contour_points < 16) throw DomainError("contour_points must be at least 16");
  if (settings_.contour_radius < 0.0 || !std::isfinite(settings_.contour_radius))
    throw DomainError("contour_radius must be non-negative (0 selects the default)");
  if (settings_.truncation_scale < 1) throw DomainError("truncation_scale must be at least 1");
}

QContext QContext::with_nome(cplx q) const { return QContext(q, settings_); }

QContext QContext::with_doubled_truncation() const {
  QSettings s = settings_;
  s.truncation_scale *= 2;
  s.max_terms *= 2;
  return QContext(q_, s);
}

QContext QContext::with_settings(QSettings settings) const { return QContext(q_, settings); }

}  // namespace mockq
