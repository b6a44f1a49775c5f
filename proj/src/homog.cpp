#include "koszul/homog.hpp"

#include <algorithm>
#include <set>

#include "koszul/error.hpp"

namespace koszul {

namespace {

std::vector<Rational> zero_vector(std::size_t n) { return std::vector<Rational>(n); }

SparseVec reversed(SparseVec const& v, std::size_t dim) {
  SparseVec out;
  out.reserve(v.size());
  for (auto it = v.rbegin(); it != v.rend(); ++it) out.emplace_back(dim - 1 - it->first, it->second);
  return out;
}

void validate_names(std::vector<std::string> const& names) {
  if (names.empty()) fail(ErrorCode::InvalidArgument, "at least one generator is required");
  std::set<std::string> seen;
  for (auto const& s : names) {
    if (s.empty()) fail(ErrorCode::InvalidArgument, "empty generator name");
    if (!seen.insert(s).second) fail(ErrorCode::InvalidArgument, "duplicate generator name '" + s + "'");
  }
}

SpanSolver relation_solver(HomogeneousAlgebra const& a) {
  std::vector<SparseVec> rows;
  for (auto const& r : a.relations()) rows.push_back(r.coeffs());
  return SpanSolver(power(a.n(), a.relation_degree()), rows);
}

}  // namespace

HomogeneousAlgebra HomogeneousAlgebra::create(std::vector<std::string> names, std::size_t N,
                                              std::vector<TensorElement> relations) {
  validate_names(names);
  if (N < 2) fail(ErrorCode::InvalidArgument, "relation degree must be at least 2");
  std::size_t n = names.size();
  std::size_t dim = power(n, N);
  Echelon e(dim);
  for (auto const& r : relations) {
    if (r.n() != n || r.degree() != N)
      fail(ErrorCode::DimensionMismatch, "relation is not an element of V^(x)N");
    if (!e.insert(r.coeffs())) fail(ErrorCode::DegenerateRelations, "relations are linearly dependent");
  }
  HomogeneousAlgebra a;
  a.names_ = std::move(names);
  a.N_ = N;
  std::vector<SparseVec> rows;
  for (auto const& r : relations) rows.push_back(r.coeffs());
  a.space_ = Subspace::span(dim, rows);
  a.relations_ = std::move(relations);
  return a;
}

HomogeneousAlgebra HomogeneousAlgebra::from_subspace(std::vector<std::string> names, std::size_t N,
                                                     Subspace const& r) {
  std::size_t n = names.size();
  if (r.ambient_dim() != power(n, N)) fail(ErrorCode::DimensionMismatch, "relation space has the wrong ambient");
  std::vector<TensorElement> rel;
  for (auto const& row : r.rows()) rel.emplace_back(n, N, row);
  return create(std::move(names), N, std::move(rel));
}

HomogeneousAlgebra HomogeneousAlgebra::free(std::vector<std::string> names, std::size_t N) {
  return create(std::move(names), N, {});
}

std::vector<std::string> default_names(std::size_t n) {
  static const char* letters[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 4 ? letters[i] : "x" + std::to_string(i));
  return out;
}

Deformation::Deformation(HomogeneousAlgebra base, std::vector<Matrix> tails)
    : base_(std::move(base)), tails_(std::move(tails)) {
  std::size_t N = base_.relation_degree();
  if (tails_.size() != N) fail(ErrorCode::DimensionMismatch, "expected one tail matrix per degree 1..N");
  for (std::size_t k = 1; k <= N; ++k) {
    Matrix const& m = tails_[k - 1];
    if (m.rows() != base_.relation_count() || m.cols() != power(base_.n(), N - k))
      fail(ErrorCode::DimensionMismatch, "tail matrix a_" + std::to_string(k) + " has the wrong shape");
  }
}

Deformation Deformation::trivial(HomogeneousAlgebra base) {
  std::vector<Matrix> tails;
  for (std::size_t k = 1; k <= base.relation_degree(); ++k)
    tails.emplace_back(base.relation_count(), power(base.n(), base.relation_degree() - k));
  return Deformation(std::move(base), std::move(tails));
}

Deformation Deformation::from_relations(std::vector<std::string> names, std::size_t N,
                                        std::vector<FilteredElement> const& relations) {
  std::size_t n = names.size();
  std::vector<TensorElement> top;
  for (auto const& p : relations) {
    if (p.n() != n) fail(ErrorCode::DimensionMismatch, "relation over the wrong generator count");
    if (p.top_degree() != static_cast<int>(N))
      fail(ErrorCode::InvalidArgument, "deformed relation must have degree exactly N");
    top.push_back(p.part(N));
  }
  HomogeneousAlgebra base = HomogeneousAlgebra::create(std::move(names), N, std::move(top));
  std::vector<Matrix> tails;
  for (std::size_t k = 1; k <= N; ++k) {
    Matrix m(relations.size(), power(n, N - k));
    for (std::size_t i = 0; i < relations.size(); ++i) {
      TensorElement t = relations[i].part(N - k);
      for (auto const& [idx, c] : t.coeffs()) m(i, idx) = c;
    }
    tails.push_back(std::move(m));
  }
  return Deformation(std::move(base), std::move(tails));
}

TensorElement Deformation::tail_of(std::size_t k, std::size_t i) const {
  Matrix const& m = tail(k);
  SparseVec v;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(i, c).is_zero()) v.emplace_back(c, m(i, c));
  return TensorElement(base_.n(), base_.relation_degree() - k, std::move(v));
}

FilteredElement Deformation::deformed_relation(std::size_t i) const {
  FilteredElement p(base_.relation(i));
  for (std::size_t k = 1; k <= base_.relation_degree(); ++k) p.add(tail_of(k, i));
  return p;
}

std::vector<FilteredElement> Deformation::deformed_relations() const {
  std::vector<FilteredElement> out;
  for (std::size_t i = 0; i < base_.relation_count(); ++i) out.push_back(deformed_relation(i));
  return out;
}

bool Deformation::is_trivial() const {
  return std::all_of(tails_.begin(), tails_.end(), [](Matrix const& m) { return m.is_zero(); });
}

Deformation Deformation::with_tail(std::size_t k, Matrix m) const {
  std::vector<Matrix> t = tails_;
  t.at(k - 1) = std::move(m);
  return Deformation(base_, std::move(t));
}

GradedQuotient::GradedQuotient(HomogeneousAlgebra a, std::size_t cap) : a_(std::move(a)), cap_(cap) {}

GradedQuotient::Level& GradedQuotient::level(std::size_t d) {
  std::size_t n = a_.n();
  std::size_t N = a_.relation_degree();
  while (levels_.size() <= d) {
    std::size_t e = levels_.size();
    std::size_t dim = power(n, e);
    check_capacity(dim, cap_, "ideal component");
    Level lv;
    lv.echelon = Echelon(dim);
    if (e > N) {
      for (auto const& row : levels_[e - 1].echelon.rows()) {
        for (std::size_t k = 0; k < n; ++k) {
          SparseVec v;
          v.reserve(row.size());
          for (auto const& [col, c] : row) v.emplace_back(col * n + (n - 1 - k), c);
          lv.echelon.insert(std::move(v));
        }
      }
    }
    if (e >= N) {
      std::size_t prefixes = power(n, e - N);
      std::size_t stride = power(n, N);
      for (std::size_t p = 0; p < prefixes; ++p) {
        for (auto const& r : a_.relations()) {
          SparseVec v;
          for (auto const& [idx, c] : r.coeffs()) v.emplace_back(p * stride + idx, c);
          lv.echelon.insert(reversed(v, dim));
        }
      }
    }
    levels_.push_back(std::move(lv));
  }
  return levels_[d];
}

GradedQuotient::Level& GradedQuotient::reduced_level(std::size_t d) {
  Level& lv = level(d);
  if (lv.reduced) return lv;
  std::size_t dim = power(a_.n(), d);
  lv.rref = lv.echelon.rref();
  lv.row_of_leading.assign(dim, -1);
  for (std::size_t r = 0; r < lv.rref.size(); ++r)
    lv.row_of_leading[dim - 1 - lv.rref[r].front().first] = static_cast<std::int32_t>(r);
  lv.rep_position.assign(dim, -1);
  lv.reps.clear();
  for (std::size_t w = 0; w < dim; ++w) {
    if (lv.row_of_leading[w] < 0) {
      lv.rep_position[w] = static_cast<std::int32_t>(lv.reps.size());
      lv.reps.push_back(w);
    }
  }
  lv.reduced = true;
  return lv;
}

Subspace GradedQuotient::ideal(std::size_t d) {
  Level& lv = level(d);
  std::size_t dim = power(a_.n(), d);
  std::vector<SparseVec> rows;
  for (auto const& r : lv.echelon.rows()) rows.push_back(reversed(r, dim));
  return Subspace::span(dim, std::move(rows));
}

std::size_t GradedQuotient::ideal_dim(std::size_t d) { return level(d).echelon.rank(); }

std::size_t GradedQuotient::dim(std::size_t d) { return power(a_.n(), d) - ideal_dim(d); }

std::vector<std::size_t> const& GradedQuotient::representatives(std::size_t d) { return reduced_level(d).reps; }

std::vector<Word> GradedQuotient::representative_words(std::size_t d) {
  std::vector<Word> out;
  for (auto w : representatives(d)) out.push_back(unflatten(w, a_.n(), d));
  return out;
}

Vector GradedQuotient::normal_form_word(std::size_t degree, std::size_t index) {
  Level& lv = reduced_level(degree);
  std::size_t dim = power(a_.n(), degree);
  if (index >= dim) fail(ErrorCode::InvalidArgument, "word index out of range");
  Vector out = zero_vector(lv.reps.size());
  if (lv.rep_position[index] >= 0) {
    out[static_cast<std::size_t>(lv.rep_position[index])] = 1;
    return out;
  }
  SparseVec const& row = lv.rref[static_cast<std::size_t>(lv.row_of_leading[index])];
  for (std::size_t k = 1; k < row.size(); ++k) {
    std::size_t w = dim - 1 - row[k].first;
    out[static_cast<std::size_t>(lv.rep_position[w])] -= row[k].second;
  }
  return out;
}

Vector GradedQuotient::normal_form(TensorElement const& t) {
  if (t.n() != a_.n()) fail(ErrorCode::DimensionMismatch, "tensor over the wrong generator count");
  Vector out = zero_vector(dim(t.degree()));
  for (auto const& [idx, c] : t.coeffs()) {
    Vector v = normal_form_word(t.degree(), idx);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) out[k] += c * v[k];
  }
  return out;
}

Vector GradedQuotient::multiply(std::size_t i, std::size_t p, std::size_t j, std::size_t q) {
  std::size_t left = representatives(i).at(p);
  std::size_t right = representatives(j).at(q);
  return normal_form_word(i + j, left * power(a_.n(), j) + right);
}

Subspace ideal_component(HomogeneousAlgebra const& a, std::size_t d, std::size_t cap) {
  GradedQuotient q(a, cap);
  return q.ideal(d);
}

std::vector<std::size_t> hilbert_function(HomogeneousAlgebra const& a, std::size_t d_max, std::size_t cap) {
  GradedQuotient q(a, cap);
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d <= d_max; ++d) out.push_back(q.dim(d));
  return out;
}

HomogeneousAlgebra koszul_dual(HomogeneousAlgebra const& a) {
  std::vector<std::string> names;
  for (auto const& s : a.names()) {
    if (s.size() > 1 && s.back() == '*')
      names.push_back(s.substr(0, s.size() - 1));
    else
      names.push_back(s + "*");
  }
  return HomogeneousAlgebra::from_subspace(std::move(names), a.relation_degree(),
                                           orthogonal_complement(a.relation_space()));
}

std::size_t koszul_degree(std::size_t m, std::size_t N) {
  return m % 2 == 0 ? m / 2 * N : (m - 1) / 2 * N + 1;
}

Subspace coalgebra_component(HomogeneousAlgebra const& a, std::size_t m, std::size_t cap) {
  std::size_t n = a.n();
  std::size_t N = a.relation_degree();
  if (m == 0) return Subspace::full(1);
  if (m == 1) return Subspace::full(n);
  std::size_t kappa = koszul_degree(m, N);
  std::size_t dim = power(n, kappa);
  check_capacity(dim, cap, "coalgebra component");
  Subspace out = Subspace::full(dim);
  std::size_t stride = power(n, N);
  for (std::size_t i = 0; i + N <= kappa; ++i) {
    std::size_t j = kappa - N - i;
    std::size_t right = power(n, j);
    std::vector<SparseVec> rows;
    for (std::size_t p = 0; p < power(n, i); ++p) {
      for (auto const& r : a.relations()) {
        for (std::size_t s = 0; s < right; ++s) {
          SparseVec v;
          for (auto const& [idx, c] : r.coeffs()) v.emplace_back((p * stride + idx) * right + s, c);
          rows.push_back(std::move(v));
        }
      }
    }
    out = intersect(out, Subspace::span(dim, std::move(rows)));
    if (out.is_zero()) break;
  }
  return out;
}

DualComponentBasis dual_component_basis(HomogeneousAlgebra const& a, std::size_t m, std::size_t cap) {
  GradedQuotient q(koszul_dual(a), cap);
  DualComponentBasis out;
  out.representatives = q.representative_words(m);
  std::size_t dm = q.dim(m);
  for (std::size_t i = 0; i <= m; ++i) {
    std::size_t di = q.dim(i);
    std::size_t dj = q.dim(m - i);
    Matrix t(di * dj, dm);
    for (std::size_t p = 0; p < di; ++p) {
      for (std::size_t r = 0; r < dj; ++r) {
        Vector v = q.multiply(i, p, m - i, r);
        for (std::size_t k = 0; k < dm; ++k) t(p * dj + r, k) = v[k];
      }
    }
    out.products.push_back(std::move(t));
  }
  return out;
}

std::optional<Vector> relation_coordinates(HomogeneousAlgebra const& a, TensorElement const& t) {
  if (t.n() != a.n() || t.degree() != a.relation_degree())
    fail(ErrorCode::DimensionMismatch, "element is not in V^(x)N");
  return relation_solver(a).solve(t.coeffs());
}

std::optional<Matrix> expand_right(HomogeneousAlgebra const& a, TensorElement const& c) {
  std::size_t N = a.relation_degree();
  if (c.n() != a.n() || c.degree() < N) fail(ErrorCode::DimensionMismatch, "element too short to expand");
  std::size_t tail = power(a.n(), c.degree() - N);
  std::vector<SparseVec> slices(tail);
  for (auto const& [idx, x] : c.coeffs()) slices[idx % tail].emplace_back(idx / tail, x);
  SpanSolver solver = relation_solver(a);
  Matrix out(a.relation_count(), tail);
  for (std::size_t j = 0; j < tail; ++j) {
    auto coords = solver.solve(slices[j]);
    if (!coords) return std::nullopt;
    for (std::size_t i = 0; i < coords->size(); ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

std::optional<Matrix> expand_left(HomogeneousAlgebra const& a, TensorElement const& c) {
  std::size_t N = a.relation_degree();
  if (c.n() != a.n() || c.degree() < N) fail(ErrorCode::DimensionMismatch, "element too short to expand");
  std::size_t head = power(a.n(), c.degree() - N);
  std::size_t stride = power(a.n(), N);
  std::vector<SparseVec> slices(head);
  for (auto const& [idx, x] : c.coeffs()) slices[idx / stride].emplace_back(idx % stride, x);
  SpanSolver solver = relation_solver(a);
  Matrix out(head, a.relation_count());
  for (std::size_t i = 0; i < head; ++i) {
    auto coords = solver.solve(slices[i]);
    if (!coords) return std::nullopt;
    for (std::size_t j = 0; j < coords->size(); ++j) out(i, j) = (*coords)[j];
  }
  return out;
}

BGReport bg_check(Deformation const& u, std::size_t cap) {
  HomogeneousAlgebra const& a = u.base();
  if (a.relation_degree() != 2) fail(ErrorCode::WrongN, "the Jacobi conditions are implemented for N = 2");
  std::size_t n = a.n();
  std::size_t dr = a.relation_count();
  std::vector<TensorElement> nu;
  std::vector<Rational> theta;
  for (std::size_t i = 0; i < dr; ++i) {
    nu.push_back(Rational(-1) * u.tail_of(1, i));
    theta.push_back(-u.tail(2)(i, 0));
  }
  auto gen = [n](std::size_t i) { return TensorElement::word(n, Word{static_cast<std::uint32_t>(i)}); };

  BGReport rep;
  Subspace c3 = coalgebra_component(a, 3, cap);
  rep.c3_dim = c3.dim();
  auto record = [&](char const* name, TensorElement const& c, TensorElement defect) {
    if (rep.holds) {
      rep.failing_condition = name;
      rep.witness = c;
      rep.defect = std::move(defect);
    }
    rep.holds = false;
  };
  for (auto const& row : c3.rows()) {
    TensorElement c(n, 3, row);
    auto A = expand_right(a, c);
    auto B = expand_left(a, c);
    if (!A || !B) fail(ErrorCode::InvalidArgument, "C_{-3} element not in R(x)V and V(x)R");
    TensorElement s(n, 2);
    TensorElement t_theta(n, 1);
    for (std::size_t i = 0; i < dr; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational const& aij = (*A)(i, j);
        if (!aij.is_zero()) {
          s += aij * tensor(nu[i], gen(j));
          t_theta += (aij * theta[i]) * gen(j);
        }
        Rational const& bji = (*B)(j, i);
        if (!bji.is_zero()) {
          s -= bji * tensor(gen(j), nu[i]);
          t_theta -= (bji * theta[i]) * gen(j);
        }
      }
    }
    auto sigma = relation_coordinates(a, s);
    if (!sigma) {
      rep.j1 = rep.j2 = rep.j3 = false;
      record("J1", c, s);
      continue;
    }
    TensorElement nu_s(n, 1);
    Rational theta_s;
    for (std::size_t i = 0; i < dr; ++i) {
      nu_s += (*sigma)[i] * nu[i];
      theta_s += (*sigma)[i] * theta[i];
    }
    TensorElement j2 = nu_s + t_theta;
    if (!j2.is_zero()) {
      rep.j2 = false;
      record("J2", c, j2);
    }
    if (!theta_s.is_zero()) {
      rep.j3 = false;
      record("J3", c, TensorElement::word(n, Word{}, theta_s));
    }
  }
  return rep;
}

PBWReport pbw_check(Deformation const& u, std::size_t d_max, std::size_t slack, std::size_t cap) {
  HomogeneousAlgebra const& a = u.base();
  std::size_t n = a.n();
  std::size_t N = a.relation_degree();
  if (slack < N) fail(ErrorCode::InvalidArgument, "slack must be at least the relation degree");
  std::size_t D = d_max + slack;
  // Columns: degree D first, down to degree 0; inside a degree, largest word first.
  std::vector<std::size_t> offset(D + 2, 0);
  std::size_t total = 0;
  for (std::size_t e = D + 1; e-- > 0;) {
    offset[e] = total;
    std::size_t block = power(n, e);
    if (block > cap || total > cap) fail(ErrorCode::CapacityExceeded, "filtered tensor space exceeds the cap");
    total += block;
  }
  check_capacity(total, cap, "filtered tensor space");
  auto column = [&](std::size_t e, std::size_t idx) { return offset[e] + (power(n, e) - 1 - idx); };
  auto degree_of_column = [&](std::size_t col) {
    std::size_t e = D;
    while (e > 0 && col >= offset[e] + power(n, e)) --e;
    return e;
  };

  std::vector<std::vector<TensorElement>> rel;
  for (auto const& p : u.deformed_relations()) {
    std::vector<TensorElement> parts;
    for (std::size_t e = 0; e <= N; ++e) parts.push_back(p.part(e));
    rel.push_back(std::move(parts));
  }
  Echelon w(total);
  for (std::size_t t = N; t <= D; ++t) {
    for (std::size_t i = 0; i + N <= t; ++i) {
      std::size_t j = t - N - i;
      std::size_t right = power(n, j);
      for (std::size_t p = 0; p < power(n, i); ++p) {
        for (auto const& r : rel) {
          for (std::size_t q = 0; q < right; ++q) {
            SparseVec v;
            for (std::size_t e = 0; e <= N; ++e) {
              std::size_t mid = power(n, e);
              for (auto const& [idx, c] : r[e].coeffs())
                v.emplace_back(column(i + e + j, (p * mid + idx) * right + q), c);
            }
            std::sort(v.begin(), v.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
            w.insert(std::move(v));
          }
        }
      }
    }
  }

  std::vector<std::size_t> by_degree(D + 1, 0);
  for (auto col : w.pivots()) ++by_degree[degree_of_column(col)];

  GradedQuotient q(a, cap);
  PBWReport rep;
  rep.slack = slack;
  rep.verified_up_to = d_max;
  std::size_t got = 0, want = 0, words = 0, quotient = 0;
  for (std::size_t d = 0; d <= d_max; ++d) {
    got += by_degree[d];
    want += q.ideal_dim(d);
    words += power(n, d);
    quotient += q.dim(d);
    rep.filtered_dims.push_back(words - got);
    rep.expected_dims.push_back(quotient);
    if (got != want && !rep.first_failure) {
      rep.first_failure = d;
      rep.holds = false;
    }
  }
  return rep;
}

std::vector<std::int64_t> gorenstein3_series(std::size_t n, std::size_t N, std::size_t d_max) {
  std::vector<std::int64_t> h(d_max + 1, 0);
  auto at = [&](std::size_t d, std::size_t back) -> std::int64_t { return d >= back ? h[d - back] : 0; };
  auto nn = static_cast<std::int64_t>(n);
  for (std::size_t d = 0; d <= d_max; ++d) {
    if (d == 0) {
      h[0] = 1;
      continue;
    }
    h[d] = nn * at(d, 1) - nn * at(d, N) + at(d, N + 1);
  }
  return h;
}

GorensteinCandidateReport gorenstein_candidate_check(HomogeneousAlgebra const& a, std::size_t d_max,
                                                     std::size_t cap) {
  GorensteinCandidateReport rep;
  rep.n = a.n();
  rep.relation_count = a.relation_count();
  rep.relation_count_matches = a.relation_count() == a.n();
  rep.c3_dim = coalgebra_component(a, 3, cap).dim();
  rep.c3_is_line = *rep.c3_dim == 1;
  GradedQuotient q(a, cap);
  for (std::size_t d = 0; d <= d_max; ++d) rep.hilbert.push_back(static_cast<std::int64_t>(q.dim(d)));
  rep.expected = gorenstein3_series(a.n(), a.relation_degree(), d_max);
  rep.hilbert_matches = rep.hilbert == rep.expected;
  rep.verified_up_to = d_max;
  return rep;
}

}  // namespace koszul
