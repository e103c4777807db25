#include "mockq/qdiff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "mockq/errors.hpp"

namespace mockq {

// --------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(cplx c, int power) {
  LaurentPoly p;
  p.add(power, c);
  return p;
}

void LaurentPoly::add(int power, cplx c) {
  if (c == cplx{}) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{}) terms_.erase(it);
  }
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

cplx LaurentPoly::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? cplx{} : it->second;
}

cplx LaurentPoly::operator()(cplx x) const {
  cplx acc{};
  for (const auto& [p, c] : terms_) acc += c * ipow(x, p);
  return acc;
}

LaurentPoly LaurentPoly::dilated(cplx s) const {
  LaurentPoly out;
  for (const auto& [p, c] : terms_) out.add(p, c * ipow(s, p));
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(cplx c) {
  if (c == cplx{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add(pa + pb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::pruned(double eps) const {
  LaurentPoly out;
  for (const auto& [p, c] : terms_)
    if (std::abs(c) > eps) out.add(p, c);
  return out;
}

// --------------------------------------------------------------------------
// QDiffOperator

QDiffOperator::QDiffOperator(cplx base) : base_(base) {
  terms_.emplace(0, LaurentPoly::monomial(1.0));
}

QDiffOperator::QDiffOperator(cplx base, std::map<int, LaurentPoly> terms)
    : base_(base), terms_(std::move(terms)) {
  for (const auto& [k, c] : terms_)
    if (k < 0) throw DomainError("shift orders must be non-negative");
  normalize();
  if (terms_.empty()) throw DomainError("a q-difference operator needs a nonzero term");
}

void QDiffOperator::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

QDiffOperator QDiffOperator::shift(cplx base, int k) {
  return QDiffOperator(base, {{k, LaurentPoly::monomial(1.0)}});
}

QDiffOperator QDiffOperator::multiplication(cplx base, LaurentPoly c) {
  return QDiffOperator(base, {{0, std::move(c)}});
}

int QDiffOperator::order() const { return terms_.rbegin()->first; }

LaurentPoly QDiffOperator::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

int QDiffOperator::min_x_degree() const {
  int d = terms_.begin()->second.min_degree();
  for (const auto& [k, c] : terms_) d = std::min(d, c.min_degree());
  return d;
}

int QDiffOperator::max_x_degree() const {
  int d = terms_.begin()->second.max_degree();
  for (const auto& [k, c] : terms_) d = std::max(d, c.max_degree());
  return d;
}

QDiffOperator& QDiffOperator::operator+=(const QDiffOperator& other) {
  if (other.base_ != base_) throw DomainError("operators act with different nomes");
  for (const auto& [k, c] : other.terms_) terms_[k] += c;
  normalize();
  if (terms_.empty()) throw DomainError("operator sum cancels to zero");
  return *this;
}

double max_coefficient_distance(const QDiffOperator& a, const QDiffOperator& b) {
  double worst = 0.0;
  std::set<std::pair<int, int>> keys;
  for (const auto* op : {&a, &b})
    for (const auto& [k, c] : op->terms())
      for (const auto& [p, v] : c.monomials()) keys.emplace(k, p);
  for (const auto& [k, p] : keys)
    worst = std::max(worst, std::abs(a.coefficient(k).coefficient(p) -
                                     b.coefficient(k).coefficient(p)));
  return worst;
}

QDiffOperator compose(const QDiffOperator& a, const QDiffOperator& b) {
  if (a.base() != b.base()) throw DomainError("cannot compose operators with different nomes");
  std::map<int, LaurentPoly> out;
  for (const auto& [i, ca] : a.terms()) {
    const cplx s = ipow(a.base(), i);
    for (const auto& [j, cb] : b.terms()) out[i + j] += ca * cb.dilated(s);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  if (out.empty()) throw DomainError("composition is the zero operator");
  return QDiffOperator(a.base(), std::move(out));
}

QDiffOperator op_from_roots(std::span<const cplx> exponents, const QContext& ctx) {
  const cplx q = ctx.q();
  QDiffOperator op(q);
  for (const cplx& alpha : exponents) {
    const QDiffOperator factor(q, {{1, LaurentPoly::monomial(1.0)},
                                   {0, LaurentPoly::monomial(-cpow(q, alpha))}});
    op = compose(op, factor);
  }
  return op;
}

QDiffOperator op_linear_eq(cplx alpha, std::span<const cplx> exponents, const QContext& ctx) {
  const cplx q = ctx.q();
  const QDiffOperator last(q, {{1, LaurentPoly::monomial(1.0)},
                               {0, LaurentPoly::monomial(cpow(q, alpha), 1)}});
  return compose(op_from_roots(exponents, ctx), last);
}

namespace {

std::vector<cplx> integer_exponents(int from, int to) {
  std::vector<cplx> out;
  for (int k = from; k <= to; ++k) out.emplace_back(static_cast<double>(k));
  return out;
}

}  // namespace

QDiffOperator op_appell(int m, cplx y, const QContext& ctx) {
  if (m < 1) throw DomainError("op_appell needs m >= 1");
  if (y == cplx{}) throw DomainError("op_appell needs y != 0");
  const cplx q = ctx.q();
  const auto exps = integer_exponents(0, m - 1);
  const QDiffOperator last(q, {{1, LaurentPoly::monomial(1.0)},
                               {0, LaurentPoly::monomial(1.0 / y, m)}});
  return compose(op_from_roots(exps, ctx), last);
}

QDiffOperator op_gm1(int m, const QContext& ctx) {
  if (m < 1) throw DomainError("op_gm1 needs m >= 1");
  const cplx q = ctx.q();
  const auto exps = integer_exponents(1, m - 1);
  const QDiffOperator last(q, {{1, LaurentPoly::monomial(1.0)},
                               {0, LaurentPoly::monomial(1.0, m)}});
  return compose(op_from_roots(exps, ctx), last);
}

QDiffOperator op_diver(std::span<const cplx> alphas, std::span<const cplx> betas,
                       const QContext& ctx) {
  if (alphas.size() != betas.size())
    throw DomainError("op_diver needs equally many alpha and beta exponents");
  const cplx q = ctx.q();
  const QDiffOperator left = compose(QDiffOperator::shift(q, 1), op_from_roots(alphas, ctx));
  const QDiffOperator right =
      compose(QDiffOperator::multiplication(q, LaurentPoly::monomial(1.0, 1)),
              op_from_roots(betas, ctx));
  return left + right;
}

namespace {

std::vector<cplx> stencil_terms(const QDiffOperator& op, const ComplexFn& f, cplx x) {
  std::vector<cplx> terms;
  terms.reserve(op.terms().size());
  for (const auto& [k, c] : op.terms()) terms.push_back(c(x) * f(x * ipow(op.base(), k)));
  return terms;
}

}  // namespace

cplx apply_numeric(const QDiffOperator& op, const ComplexFn& f, cplx x) {
  cplx acc{};
  for (const cplx& t : stencil_terms(op, f, x)) acc += t;
  return acc;
}

double relative_residual(const QDiffOperator& op, const ComplexFn& f, cplx x) {
  const auto terms = stencil_terms(op, f, x);
  return relative_gap(terms);
}

// --------------------------------------------------------------------------
// Newton-Puiseux diagram

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

using Pt = std::pair<int, int>;

std::int64_t cross(const Pt& o, const Pt& a, const Pt& b) {
  return static_cast<std::int64_t>(a.first - o.first) * (b.second - o.second) -
         static_cast<std::int64_t>(a.second - o.second) * (b.first - o.first);
}

// Lower chain of Andrew's monotone chain over sorted points.
std::vector<Pt> lower_chain(const std::vector<Pt>& pts) {
  std::vector<Pt> h;
  for (const Pt& p : pts) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  return h;
}

std::vector<Pt> upper_chain(const std::vector<Pt>& pts) {
  std::vector<Pt> h;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
    h.push_back(*it);
  }
  return h;
}

}  // namespace

NPDiagram newton_puiseux(const QDiffOperator& op) {
  NPDiagram d;
  std::set<Pt> pts;
  for (const auto& [l, c] : op.terms())
    for (const auto& [k, v] : c.monomials()) pts.emplace(k, l);
  d.points.assign(pts.begin(), pts.end());

  if (d.points.size() <= 2) {
    d.hull = d.points;
  } else {
    auto lower = lower_chain(d.points);
    auto upper = upper_chain(d.points);
    lower.pop_back();
    upper.pop_back();
    d.hull = lower;
    d.hull.insert(d.hull.end(), upper.begin(), upper.end());
  }

  // Minimal shift order for each x-degree.
  std::vector<Pt> floor_pts;
  for (const Pt& p : d.points)
    if (floor_pts.empty() || floor_pts.back().first != p.first) floor_pts.push_back(p);
  d.hull_vertices = lower_chain(floor_pts);
  for (std::size_t i = 1; i < d.hull_vertices.size(); ++i) {
    const auto dk = d.hull_vertices[i].first - d.hull_vertices[i - 1].first;
    const auto dl = d.hull_vertices[i].second - d.hull_vertices[i - 1].second;
    const auto g = std::gcd(dk, dl);
    d.slopes.push_back(Rational{dl / g, dk / g});
  }
  return d;
}

}  // namespace mockq
