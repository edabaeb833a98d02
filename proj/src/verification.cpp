#include "oscul/verification.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "oscul/errors.hpp"

namespace oscul {

namespace {

constexpr std::int64_t kCoordRange = 30;

void monomials_rec(int vars_left, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (vars_left == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.push_back(e);
    monomials_rec(vars_left - 1, remaining - e, cur, out);
    cur.pop_back();
  }
}

IntPoint random_vector(std::mt19937_64& rng, std::size_t dim, std::int64_t range = kCoordRange) {
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  IntPoint v(dim);
  do {
    for (auto& c : v) c = dist(rng);
  } while (std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; }));
  return v;
}

template <class F>
std::vector<F> to_field(const IntPoint& v) {
  std::vector<F> out;
  out.reserve(v.size());
  for (auto c : v) out.emplace_back(c);
  return out;
}

template <class F>
F eval_monomial(const std::vector<int>& exps, const std::vector<F>& pt) {
  F r(1);
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (int e = 0; e < exps[i]; ++e) r = r * pt[i];
  return r;
}

/// Value of a form (coefficients in the PolySpace basis) at a point.
template <class F>
F eval_form(const PolySpace& s, const std::vector<F>& coeffs, const std::vector<F>& pt) {
  F r(0);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!is_zero(coeffs[i])) r = r + coeffs[i] * eval_monomial(s.monomials()[i], pt);
  return r;
}

template <class F>
std::vector<F> multiply_forms(const PolySpace& a, const std::vector<F>& fa, const PolySpace& b,
                              const std::vector<F>& fb, const PolySpace& out) {
  std::vector<F> r(out.dim(), F(0));
  std::vector<int> e(a.n() + 1);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (is_zero(fa[i])) continue;
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (is_zero(fb[j])) continue;
      for (int v = 0; v <= a.n(); ++v) e[v] = a.monomials()[i][v] + b.monomials()[j][v];
      const std::size_t k = out.index_of(e);
      r[k] = r[k] + fa[i] * fb[j];
    }
  }
  return r;
}

template <class F>
std::size_t vectors_rank(const std::vector<std::vector<F>>& vs, std::size_t dim) {
  return rank_of_vectors(vs, dim);
}

/// A random linear form vanishing at x (x has a nonzero coordinate).
template <class F>
std::vector<F> random_form_through(std::mt19937_64& rng, const IntPoint& x) {
  std::vector<F> c = to_field<F>(random_vector(rng, x.size()));
  const std::vector<F> xf = to_field<F>(x);
  std::size_t piv = 0;
  while (is_zero(xf[piv])) ++piv;
  F rest(0);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != piv) rest = rest + c[j] * xf[j];
  c[piv] = -rest / xf[piv];
  return c;
}

}  // namespace

PolySpace::PolySpace(int n, int d) : n_(n), d_(d) {
  if (n < 1 || d < 0) throw PreconditionError("PolySpace needs n >= 1 and d >= 0");
  std::vector<int> cur;
  monomials_rec(n + 1, d, cur, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t PolySpace::index_of(const std::vector<int>& exps) const {
  auto it = index_.find(exps);
  if (it == index_.end()) throw PreconditionError("monomial not in this PolySpace");
  return it->second;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// Contact conditions

template <class F>
Matrix<F> contact_matrix(const ContactSystem& cs) {
  if (cs.r < 1 || cs.r > cs.d + 1) throw RangeError("contact order must satisfy 1 <= r <= d + 1");
  const std::size_t dim = static_cast<std::size_t>(cs.n) + 1;
  if (cs.x.size() != dim || cs.p.size() != dim || cs.q.size() != dim)
    throw PreconditionError("points must have n + 1 coordinates");

  const auto xr = to_field<Rational>(cs.x), pr = to_field<Rational>(cs.p), qr = to_field<Rational>(cs.q);
  if (rank_of_vectors<Rational>({pr, qr}, dim) != 2) throw GeometricError("p and q do not span a line");
  if (rank_of_vectors<Rational>({pr, qr, xr}, dim) != 2) throw GeometricError("x does not lie on the line");
  const IntPoint& other = rank_of_vectors<Rational>({xr, pr}, dim) == 2 ? cs.p : cs.q;

  const std::vector<F> x = to_field<F>(cs.x), y = to_field<F>(other);
  const PolySpace s(cs.n, cs.d);
  Matrix<F> m(cs.r, s.dim());
  for (std::size_t col = 0; col < s.dim(); ++col) {
    // prod_i (x_i + t y_i)^{a_i} truncated at t^{r-1}.
    std::vector<F> poly(cs.r, F(0));
    poly[0] = F(1);
    const auto& a = s.monomials()[col];
    for (std::size_t i = 0; i < dim; ++i)
      for (int e = 0; e < a[i]; ++e)
        for (int k = cs.r - 1; k >= 0; --k) poly[k] = poly[k] * x[i] + (k > 0 ? poly[k - 1] * y[i] : F(0));
    for (int k = 0; k < cs.r; ++k) m(k, col) = poly[k];
  }
  return m;
}

template Matrix<Fp> contact_matrix<Fp>(const ContactSystem&);
template Matrix<Rational> contact_matrix<Rational>(const ContactSystem&);

ContactReport contact_rank(const ContactSystem& cs, FieldKind field) {
  ContactReport rep;
  rep.N = PolySpace(cs.n, cs.d).dim();
  if (field == FieldKind::Prime) {
    rep.rank = rank(contact_matrix<Fp>(cs));
    if (rep.rank < static_cast<std::size_t>(cs.r)) {
      rep.rank = rank(contact_matrix<Rational>(cs));
      rep.rechecked_over_rationals = true;
    }
  } else {
    rep.rank = rank(contact_matrix<Rational>(cs));
  }
  rep.fiber_dim = rep.N - rep.rank;
  return rep;
}

ContactSurvey contact_survey(int n, int d, int samples, FieldKind field, std::uint64_t seed) {
  if (n < 1 || d < 1 || samples < 1) throw PreconditionError("contact survey needs n, d, samples >= 1");
  ContactSurvey sv;
  sv.n = n;
  sv.d = d;
  sv.samples = samples;
  sv.seed = seed;
  sv.N = PolySpace(n, d).dim();
  sv.min_rank.assign(d + 2, sv.N);
  sv.max_rank.assign(d + 2, 0);
  sv.pass = true;
  for (int s = 0; s < samples; ++s) {
    const std::uint64_t sample_seed = derive_seed(seed, s);
    std::mt19937_64 rng(sample_seed);
    IntPoint x, y;
    do {
      x = random_vector(rng, n + 1);
      y = random_vector(rng, n + 1);
    } while (rank_of_vectors<Rational>({to_field<Rational>(x), to_field<Rational>(y)}, n + 1) != 2);
    ContactSystem cs{n, d, 1, x, IntPoint(n + 1), IntPoint(n + 1)};
    for (int i = 0; i <= n; ++i) {
      cs.p[i] = 2 * x[i] + y[i];
      cs.q[i] = x[i] - y[i];
    }
    bool ok = true;
    for (int r = 1; r <= d + 1; ++r) {
      cs.r = r;
      const std::size_t rk = contact_rank(cs, field).rank;
      sv.min_rank[r] = std::min(sv.min_rank[r], rk);
      sv.max_rank[r] = std::max(sv.max_rank[r], rk);
      if (rk != static_cast<std::size_t>(r)) ok = false;
    }
    if (!ok) {
      sv.pass = false;
      sv.failing_seeds.push_back(sample_seed);
    }
  }
  return sv;
}

// ---------------------------------------------------------------------------
// Global generation of M^d(1) on P^n

namespace {

template <class F>
std::vector<std::vector<F>> multiplication_kernel(int n, int d) {
  const PolySpace sd(n, d), sd1(n, d + 1);
  const std::size_t vars = n + 1;
  Matrix<F> mu(sd1.dim(), sd.dim() * vars);
  std::vector<int> e;
  for (std::size_t m = 0; m < sd.dim(); ++m)
    for (std::size_t j = 0; j < vars; ++j) {
      e = sd.monomials()[m];
      ++e[j];
      mu(sd1.index_of(e), m * vars + j) = F(1);
    }
  return kernel_basis(std::move(mu));
}

/// sum_j x_j F_j for a kernel element laid out as (monomial, variable).
template <class F>
std::vector<F> mpn_value(const std::vector<F>& kappa, const std::vector<F>& x, std::size_t N) {
  const std::size_t vars = x.size();
  std::vector<F> v(N, F(0));
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t j = 0; j < vars; ++j) {
      const F& c = kappa[m * vars + j];
      if (!is_zero(c)) v[m] = v[m] + c * x[j];
    }
  return v;
}

template <class F>
std::pair<std::size_t, bool> mpn_sample_rank(const std::vector<std::vector<F>>& kernel, std::size_t used,
                                             const PolySpace& sd, const IntPoint& point) {
  const std::vector<F> x = to_field<F>(point);
  std::vector<std::vector<F>> values;
  bool in_fiber = true;
  for (std::size_t i = 0; i < used; ++i) {
    values.push_back(mpn_value(kernel[i], x, sd.dim()));
    if (!is_zero(eval_form(sd, values.back(), x))) in_fiber = false;
  }
  return {vectors_rank(values, sd.dim()), in_fiber};
}

}  // namespace

GenerationReport check_gg_Mpn(int n, int d, int samples, FieldKind field, std::uint64_t seed,
                              std::size_t max_sections) {
  if (n < 1 || d < 1 || samples < 1) throw PreconditionError("check_gg_Mpn needs n, d, samples >= 1");
  const PolySpace sd(n, d);
  if (sd.dim() * (n + 1) > 20000) throw BudgetExceeded("S^d (x) S^1 is too large for a desk-scale check");

  GenerationReport rep;
  rep.n = n;
  rep.d = d;
  rep.seed = seed;
  rep.field = field;
  rep.fiber_dim = sd.dim() - 1;
  rep.min_rank = rep.fiber_dim;

  std::vector<std::vector<Fp>> kernel_p;
  std::optional<std::vector<std::vector<Rational>>> kernel_q;
  if (field == FieldKind::Prime) kernel_p = multiplication_kernel<Fp>(n, d);
  else kernel_q = multiplication_kernel<Rational>(n, d);
  rep.sections = field == FieldKind::Prime ? kernel_p.size() : kernel_q->size();
  rep.sections_used = max_sections == 0 ? rep.sections : std::min(max_sections, rep.sections);

  for (int s = 0; s < samples; ++s) {
    SampleRank sr;
    sr.seed = derive_seed(seed, s);
    std::mt19937_64 rng(sr.seed);
    const IntPoint x = random_vector(rng, n + 1);
    bool in_fiber = true;
    if (field == FieldKind::Prime) {
      std::tie(sr.rank, in_fiber) = mpn_sample_rank(kernel_p, rep.sections_used, sd, x);
      if (sr.rank < rep.fiber_dim) {
        if (!kernel_q) kernel_q = multiplication_kernel<Rational>(n, d);
        std::tie(sr.rank, in_fiber) = mpn_sample_rank(*kernel_q, rep.sections_used, sd, x);
        sr.rechecked_over_rationals = true;
      }
    } else {
      std::tie(sr.rank, in_fiber) = mpn_sample_rank(*kernel_q, rep.sections_used, sd, x);
    }
    rep.values_in_fiber = rep.values_in_fiber && in_fiber;
    rep.min_rank = std::min(rep.min_rank, sr.rank);
    rep.samples.push_back(sr);
  }
  rep.pass = rep.values_in_fiber && rep.min_rank == rep.fiber_dim;
  return rep;
}

// ---------------------------------------------------------------------------
// Global generation of M^1_G(1) on G(1, n)

namespace {

template <class F>
F pluecker(const std::vector<F>& u, const std::vector<F>& v, int i, int j) {
  return u[i] * v[j] - u[j] * v[i];
}

template <class F>
std::vector<F> mat_vec(const std::vector<std::vector<F>>& g, const std::vector<F>& v) {
  std::vector<F> r(g.size(), F(0));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] = r[i] + g[i][j] * v[j];
  return r;
}

/// s_g(l) = g^T s(g l), as a linear form in X_0..X_n.
template <class F>
std::vector<F> mg_section_value(const std::vector<std::vector<F>>& g, const std::vector<F>& u,
                                const std::vector<F>& v) {
  const std::vector<F> gu = mat_vec(g, u), gv = mat_vec(g, v);
  std::vector<F> form(u.size(), F(0));
  form[0] = pluecker(gu, gv, 1, 2);
  form[1] = -pluecker(gu, gv, 0, 2);
  form[2] = pluecker(gu, gv, 0, 1);
  std::vector<F> pulled(u.size(), F(0));
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t i = 0; i < u.size(); ++i) pulled[j] = pulled[j] + g[i][j] * form[i];
  return pulled;
}

template <class F>
std::pair<std::size_t, bool> mg_sample_rank(const std::vector<std::vector<std::vector<std::int64_t>>>& group,
                                            const IntPoint& u_int, const IntPoint& v_int) {
  const std::vector<F> u = to_field<F>(u_int), v = to_field<F>(v_int);
  std::vector<std::vector<F>> values;
  bool in_fiber = true;
  for (const auto& g_int : group) {
    std::vector<std::vector<F>> g;
    for (const auto& row : g_int) g.push_back(to_field<F>(row));
    values.push_back(mg_section_value(g, u, v));
    F at_u(0), at_v(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
      at_u = at_u + values.back()[i] * u[i];
      at_v = at_v + values.back()[i] * v[i];
    }
    if (!is_zero(at_u) || !is_zero(at_v)) in_fiber = false;
  }
  return {vectors_rank(values, u.size()), in_fiber};
}

}  // namespace

GenerationReport check_gg_MG(int n, int lines, int group_elements, FieldKind field, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("check_gg_MG needs n >= 3");
  if (lines < 1 || group_elements < 1) throw PreconditionError("check_gg_MG needs lines, group_elements >= 1");
  const std::size_t dim = n + 1;
  GenerationReport rep;
  rep.n = n;
  rep.d = 1;
  rep.seed = seed;
  rep.field = field;
  rep.fiber_dim = n - 1;
  rep.min_rank = rep.fiber_dim;
  rep.sections = rep.sections_used = group_elements;

  // Identity first, then random invertible substitutions.
  std::mt19937_64 group_rng(derive_seed(seed, 0xC0FFEE));
  std::vector<std::vector<std::vector<std::int64_t>>> group;
  std::vector<std::vector<std::int64_t>> identity(dim, std::vector<std::int64_t>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) identity[i][i] = 1;
  group.push_back(identity);
  while (static_cast<int>(group.size()) < group_elements) {
    std::vector<std::vector<std::int64_t>> g;
    std::vector<std::vector<Fp>> gp;
    for (std::size_t i = 0; i < dim; ++i) {
      g.push_back(random_vector(group_rng, dim, 9));
      gp.push_back(to_field<Fp>(g.back()));
    }
    // Invertible mod p implies invertible over Q.
    if (vectors_rank(gp, dim) == dim) group.push_back(std::move(g));
  }

  for (int s = 0; s < lines; ++s) {
    SampleRank sr;
    sr.seed = derive_seed(seed, s);
    std::mt19937_64 rng(sr.seed);
    IntPoint u, v;
    do {  // resample lines meeting X1 = X2 = 0
      u = random_vector(rng, dim);
      v = random_vector(rng, dim);
    } while (u[1] * v[2] - u[2] * v[1] == 0);
    bool in_fiber = true;
    if (field == FieldKind::Prime) {
      std::tie(sr.rank, in_fiber) = mg_sample_rank<Fp>(group, u, v);
      if (sr.rank < rep.fiber_dim) {
        std::tie(sr.rank, in_fiber) = mg_sample_rank<Rational>(group, u, v);
        sr.rechecked_over_rationals = true;
      }
    } else {
      std::tie(sr.rank, in_fiber) = mg_sample_rank<Rational>(group, u, v);
    }
    rep.values_in_fiber = rep.values_in_fiber && in_fiber;
    rep.min_rank = std::min(rep.min_rank, sr.rank);
    rep.samples.push_back(sr);
  }
  rep.pass = rep.values_in_fiber && rep.min_rank == rep.fiber_dim;
  return rep;
}

// ---------------------------------------------------------------------------
// wedge^2 M^d(1)

namespace {

struct PairIndex {
  std::size_t N;
  std::size_t operator()(std::size_t a, std::size_t b) const {  // a < b
    return a * N - a * (a + 1) / 2 + (b - a - 1);
  }
  std::size_t size() const { return N * (N - 1) / 2; }
};

template <class F>
std::vector<F> wedge(const std::vector<F>& f, const std::vector<F>& g, const PairIndex& pi) {
  std::vector<F> w(pi.size(), F(0));
  for (std::size_t a = 0; a < pi.N; ++a)
    for (std::size_t b = a + 1; b < pi.N; ++b) w[pi(a, b)] = f[a] * g[b] - f[b] * g[a];
  return w;
}

template <class F>
void wedge2_compute(int n, int d, const IntPoint& point, std::uint64_t seed, Wedge2Report& rep) {
  const PolySpace sd(n, d), sd1(n, d + 1);
  const std::size_t N = sd.dim(), M = sd1.dim(), vars = n + 1;
  const PairIndex pi{N};

  // (F_a ^ F_b) (x) X_j  |->  F_a (x) F_b X_j - F_b (x) F_a X_j
  Matrix<F> koszul(N * M, pi.size() * vars);
  std::vector<int> e;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      for (std::size_t j = 0; j < vars; ++j) {
        const std::size_t col = pi(a, b) * vars + j;
        e = sd.monomials()[b];
        ++e[j];
        koszul(a * M + sd1.index_of(e), col) = koszul(a * M + sd1.index_of(e), col) + F(1);
        e = sd.monomials()[a];
        ++e[j];
        koszul(b * M + sd1.index_of(e), col) = koszul(b * M + sd1.index_of(e), col) - F(1);
      }
  const auto kernel = kernel_basis(std::move(koszul));
  rep.kernel_dim = kernel.size();

  const std::vector<F> x = to_field<F>(point);
  std::vector<F> basis_at_x(N);
  for (std::size_t a = 0; a < N; ++a) basis_at_x[a] = eval_monomial(sd.monomials()[a], x);

  std::vector<std::vector<F>> values;
  rep.values_in_fiber = true;
  for (const auto& kappa : kernel) {
    std::vector<F> w(pi.size(), F(0));
    for (std::size_t p = 0; p < pi.size(); ++p)
      for (std::size_t j = 0; j < vars; ++j) w[p] = w[p] + kappa[p * vars + j] * x[j];
    // Contraction with evaluation at x must vanish.
    std::vector<F> contraction(N, F(0));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = a + 1; b < N; ++b) {
        const F& c = w[pi(a, b)];
        if (is_zero(c)) continue;
        contraction[b] = contraction[b] + c * basis_at_x[a];
        contraction[a] = contraction[a] - c * basis_at_x[b];
      }
    if (std::any_of(contraction.begin(), contraction.end(), [](const F& c) { return !is_zero(c); }))
      rep.values_in_fiber = false;
    values.push_back(std::move(w));
  }
  rep.image_rank = vectors_rank(values, pi.size());

  // Witnesses P*A1 ^ P*A2.
  std::mt19937_64 rng(derive_seed(seed, 0x5EED));
  const PolySpace sdm1(n, d - 1), s1(n, 1);
  constexpr int kWitnesses = 8;
  std::vector<std::vector<F>> augmented = values;
  for (int w = 0; w < kWitnesses; ++w) {
    const std::vector<F> P = to_field<F>(random_vector(rng, sdm1.dim()));
    const std::vector<F> a1 = random_form_through<F>(rng, point);
    const std::vector<F> a2 = random_form_through<F>(rng, point);
    augmented.push_back(wedge(multiply_forms(sdm1, P, s1, a1, sd), multiply_forms(sdm1, P, s1, a2, sd), pi));
  }
  rep.witnesses_checked = kWitnesses;
  rep.witnesses_in_image = vectors_rank(augmented, pi.size()) == rep.image_rank;
}

}  // namespace

Wedge2Report wedge2_image_report(int n, int d, const IntPoint& x, FieldKind field, std::uint64_t seed,
                                 std::size_t budget) {
  if (n < 1 || d < 1) throw PreconditionError("wedge2_image_report needs n, d >= 1");
  const std::size_t N = PolySpace(n, d).dim(), M = PolySpace(n, d + 1).dim();
  const std::size_t entries = N * M * (N * (N - 1) / 2) * (n + 1);
  if (entries > budget)
    throw BudgetExceeded("Koszul matrix has " + std::to_string(entries) + " entries, budget is " +
                         std::to_string(budget));
  Wedge2Report rep;
  rep.n = n;
  rep.d = d;
  rep.seed = seed;
  rep.field = field;
  if (x.empty()) {
    std::mt19937_64 rng(derive_seed(seed, 0));
    rep.x = random_vector(rng, n + 1);
  } else {
    if (x.size() != static_cast<std::size_t>(n + 1)) throw PreconditionError("point must have n + 1 coordinates");
    if (std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; }))
      throw GeometricError("the zero vector is not a point of P^n");
    rep.x = x;
  }
  rep.fiber_dim = (N - 1) * (N - 2) / 2;
  if (field == FieldKind::Prime) {
    wedge2_compute<Fp>(n, d, rep.x, seed, rep);
    if (rep.image_rank < rep.fiber_dim) {
      wedge2_compute<Rational>(n, d, rep.x, seed, rep);
      rep.rechecked_over_rationals = true;
    }
  } else {
    wedge2_compute<Rational>(n, d, rep.x, seed, rep);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Alternating contraction image

namespace {

template <class F>
std::optional<int> linalg_trial(int dim_w, int dim_k, std::uint64_t trial_seed) {
  const std::size_t wk = static_cast<std::size_t>(dim_w) * dim_k;
  std::mt19937_64 rng(trial_seed);
  Matrix<F> functional(1, wk);
  const IntPoint lambda = random_vector(rng, wk);
  for (std::size_t i = 0; i < wk; ++i) functional(0, i) = F(lambda[i]);
  const auto hbar = kernel_basis(std::move(functional));  // codimension 1
  if (hbar.empty()) return std::nullopt;

  // phi: Hbar -> K as a dim_k x dim Hbar matrix; random_vector never
  // returns all zeros, so phi != 0.
  std::vector<std::vector<F>> phi_cols;
  const IntPoint raw = random_vector(rng, hbar.size() * dim_k);
  for (std::size_t h = 0; h < hbar.size(); ++h) {
    std::vector<F> col(dim_k);
    for (int k = 0; k < dim_k; ++k) col[k] = F(raw[h * dim_k + k]);
    phi_cols.push_back(std::move(col));
  }

  // <A, kappa> in W for A in W (x) K^* laid out as (w, k).
  auto contract = [&](const std::vector<F>& A, const std::vector<F>& kappa) {
    std::vector<F> r(dim_w, F(0));
    for (int w = 0; w < dim_w; ++w)
      for (int k = 0; k < dim_k; ++k) r[w] = r[w] + A[w * dim_k + k] * kappa[k];
    return r;
  };

  std::vector<std::vector<F>> image;
  for (std::size_t a = 0; a < hbar.size(); ++a)
    for (std::size_t b = a + 1; b < hbar.size(); ++b) {
      std::vector<F> v = contract(hbar[a], phi_cols[b]);
      const std::vector<F> u = contract(hbar[b], phi_cols[a]);
      for (int w = 0; w < dim_w; ++w) v[w] = v[w] - u[w];
      image.push_back(std::move(v));
    }
  return dim_w - static_cast<int>(vectors_rank(image, dim_w));
}

}  // namespace

std::optional<int> lemma_linalg_trial(int dim_w, int dim_k, std::uint64_t trial_seed, FieldKind field) {
  if (dim_w < 1 || dim_k < 1) throw PreconditionError("lemma check needs dim W, dim K >= 1");
  if (field == FieldKind::Rational) return linalg_trial<Rational>(dim_w, dim_k, trial_seed);
  auto codim = linalg_trial<Fp>(dim_w, dim_k, trial_seed);
  // Rank over F_p can only drop; confirm a violation over Q.
  if (codim && *codim > 2) codim = linalg_trial<Rational>(dim_w, dim_k, trial_seed);
  return codim;
}

LinAlgReport lemma_linalg_check(int dim_w, int dim_k, int trials, FieldKind field, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("lemma check needs trials >= 1");
  LinAlgReport rep;
  rep.dim_w = dim_w;
  rep.dim_k = dim_k;
  rep.trials = trials;
  rep.seed = seed;
  rep.field = field;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t ts = derive_seed(seed, t);
    const auto codim = lemma_linalg_trial(dim_w, dim_k, ts, field);
    if (!codim) {
      ++rep.vacuous_trials;
      continue;
    }
    rep.worst_codim = std::max(rep.worst_codim, *codim);
    if (*codim > 2) rep.violating_seeds.push_back(ts);
  }
  rep.pass = rep.violating_seeds.empty();
  return rep;
}

}  // namespace oscul
