#include "cyhg/hyperseries.hpp"

#include <algorithm>

namespace cyhg::hyperseries {

HGParams HGParams::halfs(unsigned n) {
  HGParams p;
  p.n = n;
  p.upper.assign(n, Rat(1, 2));
  p.lower.assign(n >= 1 ? n - 1 : 0, Rat(1));
  p.beta.assign(n, Rat(1, 2));
  p.validate();
  return p;
}

HGParams HGParams::dwork(unsigned n) {
  HGParams p;
  p.n = n;
  for (unsigned k = 1; k <= n; ++k) p.upper.push_back(Rat(k, n + 1));
  p.lower.assign(n >= 1 ? n - 1 : 0, Rat(1));
  for (unsigned k = 1; k <= n; ++k) p.beta.push_back(rat_mod1(Rat(k, n + 1)));
  p.validate();
  return p;
}

HGParams HGParams::preset(const std::string& name) {
  auto dash = name.rfind('-');
  if (dash != std::string::npos) {
    std::string head = name.substr(0, dash);
    std::string tail = name.substr(dash + 1);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
      unsigned n = static_cast<unsigned>(std::stoul(tail));
      if (n >= 1 && n <= 16) {
        if (head == "halfs") return halfs(n);
        if (head == "dwork") return dwork(n);
      }
    }
  }
  throw InvalidParams("unknown family preset: " + name + " (expected halfs-N or dwork-N)");
}

bool HGParams::lower_all_one() const {
  return std::all_of(lower.begin(), lower.end(), [](const Rat& r) { return r == 1; });
}

void HGParams::validate() const {
  if (n == 0 || upper.size() != n)
    throw InvalidParams("need n >= 1 upper parameters");
  if (lower.size() + 1 != n)
    throw InvalidParams("need exactly n-1 lower parameters");
  for (const auto& q : lower)
    if (is_integer(q) && q <= 0)
      throw InvalidParams("nonpositive integer lower parameter " + to_string(q));
  if (beta.size() != n)
    throw InvalidParams("need n exponents at infinity");
  for (const auto& b : beta)
    if (b < 0 || b >= 1) throw InvalidParams("beta exponents must lie in [0,1)");
}

Rat pochhammer(const Rat& rho, unsigned j) {
  Rat r(1);
  for (unsigned i = 0; i < j; ++i) r *= rho + Rat(i);
  return r;
}

QSeries hg_series(const HGParams& params, unsigned order) {
  params.validate();
  QSeries s(Var::t, order);
  Rat a(1);
  s.c[0] = a;
  for (unsigned j = 1; j <= order; ++j) {
    for (const auto& rho : params.upper) a *= rho + Rat(j - 1);
    for (const auto& q : params.lower) {
      Rat d = q + Rat(j - 1);
      if (d == 0) throw InvalidParams("vanishing lower-parameter denominator at j=" + std::to_string(j));
      a /= d;
    }
    a /= Rat(j);
    s.c[j] = a;
  }
  return s;
}

QSeries hadamard(const QSeries& a, const QSeries& b) {
  if (a.var != b.var)
    throw MixedVariables("Hadamard product requires matching series variables");
  QSeries r(a.var, std::min(a.order(), b.order()));
  for (unsigned j = 0; j <= r.order(); ++j) r.c[j] = a.c[j] * b.c[j];
  return r;
}

// ---------------------------------------------------------------------------
// alpha-deformation: polynomial arithmetic in Q[alpha]/(alpha^trunc).

namespace {

using PolyAlpha = std::vector<Rat>;  // coefficients of alpha^0 .. alpha^{trunc-1}

PolyAlpha pa_const(const Rat& c, unsigned trunc) {
  PolyAlpha p(trunc, Rat(0));
  p[0] = c;
  return p;
}

// p *= (c + alpha)
void pa_mul_linear(PolyAlpha& p, const Rat& c) {
  unsigned trunc = static_cast<unsigned>(p.size());
  for (unsigned i = trunc; i-- > 0;) {
    Rat v = p[i] * c;
    if (i >= 1) v += p[i - 1];
    p[i] = v;
  }
}

// p /= (c + alpha), c != 0, via the geometric expansion of (c + alpha)^{-1}.
void pa_div_linear(PolyAlpha& p, const Rat& c) {
  unsigned trunc = static_cast<unsigned>(p.size());
  // inverse of (c + alpha): (1/c) sum_m (-alpha/c)^m
  PolyAlpha inv(trunc, Rat(0));
  Rat pw = Rat(1) / c;
  for (unsigned m = 0; m < trunc; ++m) {
    inv[m] = pw;
    pw *= Rat(-1) / c;
  }
  PolyAlpha r(trunc, Rat(0));
  for (unsigned i = 0; i < trunc; ++i)
    for (unsigned j = 0; i + j < trunc; ++j) r[i + j] += p[i] * inv[j];
  p = std::move(r);
}

// Deformed coefficients c_j(alpha) of t^alpha * nF_{n-1}(rho+alpha; 1+alpha; t):
//   c_j = c_{j-1} * prod_k (rho_k + j - 1 + alpha) / (j + alpha)^n, c_0 = 1,
// computed in Q[alpha]/(alpha^trunc).
std::vector<PolyAlpha> deformed_coeffs(const std::vector<Rat>& rhos, unsigned order,
                                       unsigned trunc) {
  unsigned n = static_cast<unsigned>(rhos.size());
  std::vector<PolyAlpha> c;
  c.reserve(order + 1);
  c.push_back(pa_const(Rat(1), trunc));
  for (unsigned j = 1; j <= order; ++j) {
    PolyAlpha cur = c.back();
    for (const auto& rho : rhos) pa_mul_linear(cur, rho + Rat(j - 1));
    for (unsigned k = 0; k < n; ++k) pa_div_linear(cur, Rat(j));
    c.push_back(std::move(cur));
  }
  return c;
}

// Basis (g_{n-1}, ..., g_0) from the deformed coefficients:
//   g_l = (2 pi i)^{-l} sum_{m=0..l} [series of c_j^{(l-m)}] log(u)^m / m!
// with an optional fixed exponent prefactor u^{base_exp}.
std::vector<QLogSeries> alpha_basis(const std::vector<Rat>& rhos, Var var,
                                    const Rat& base_exp, unsigned order) {
  unsigned n = static_cast<unsigned>(rhos.size());
  auto c = deformed_coeffs(rhos, order, n);
  std::vector<QLogSeries> basis;
  for (unsigned l = 0; l < n; ++l) {
    QLogSeries f;
    f.var = var;
    f.exponent = base_exp;
    f.tpi_pow = -static_cast<int>(l);
    f.parts.resize(l + 1, QSeries(var, order));
    Rat mfact(1);
    for (unsigned m = 0; m <= l; ++m) {
      if (m > 0) mfact *= Rat(m);
      for (unsigned j = 0; j <= order; ++j) f.parts[m].c[j] = c[j][l - m] / mfact;
    }
    basis.push_back(std::move(f));
  }
  std::reverse(basis.begin(), basis.end());
  return basis;
}

}  // namespace

std::vector<QLogSeries> frobenius_basis(const HGParams& params, unsigned order) {
  params.validate();
  if (!params.lower_all_one())
    throw InvalidParams(
        "Frobenius alpha-deformation requires the maximally unipotent case "
        "(all lower parameters equal to 1)");
  return alpha_basis(params.upper, Var::t, Rat(0), order);
}

std::vector<QLogSeries> solutions_at_infinity(const HGParams& params, unsigned order) {
  params.validate();
  unsigned n = params.n;

  bool all_equal = true;
  bool all_distinct = true;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      Rat diff = params.upper[i] - params.upper[j];
      if (is_integer(diff))
        all_distinct = false;
      else
        all_equal = false;
    }

  if (all_equal) {
    // Resonant case (e.g. all rho = 1/2): log-corrected basis from the
    // alpha-deformation in the 1/t chart. The indicial recurrence at infinity
    // has the same Pochhammer shape as at 0 with every upper equal to rho.
    std::vector<Rat> rhos(n, params.upper[0]);
    return alpha_basis(rhos, Var::inv_t, params.upper[0], order);
  }
  if (!all_distinct)
    throw ResonantExponents(
        "partially colliding exponents at infinity are not supported "
        "(need all distinct mod 1, or all equal)");

  // Distinct case: F_k = t^{-rho_k} nF_{n-1}(rho_k,...,rho_k ;
  // 1+rho_k-rho_j (j != k) | 1/t), normalized with B_k = 1.
  std::vector<QLogSeries> basis;
  for (unsigned k = 0; k < n; ++k) {
    HGParams shifted;
    shifted.n = n;
    shifted.upper.assign(n, params.upper[k]);
    for (unsigned j = 0; j < n; ++j)
      if (j != k) shifted.lower.push_back(Rat(1) + params.upper[k] - params.upper[j]);
    shifted.beta.assign(n, Rat(0));
    QSeries body = hg_series(shifted, order);
    body.var = Var::inv_t;
    QLogSeries F;
    F.var = Var::inv_t;
    F.exponent = params.upper[k];  // u^{rho_k} = t^{-rho_k}
    F.tpi_pow = 0;
    F.parts = {body};
    basis.push_back(std::move(F));
  }
  // Ordered (F_n, ..., F_1) as used for the diagonal monodromy normal form.
  std::reverse(basis.begin(), basis.end());
  return basis;
}

}  // namespace cyhg::hyperseries
