#include "qcrystal/qsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcrystal/crystal_ops.hpp"
#include "qcrystal/errors.hpp"

namespace qcrystal {

long long ExactPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void ExactPolynomial::add(const Exponents& e, long long coeff) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw ParameterError("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                         std::to_string(nvars_));
  }
  if (coeff == 0) return;
  auto it = terms_.try_emplace(e, 0).first;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void ExactPolynomial::add_evaluation(const Evaluation& ev, long long coeff) {
  if (static_cast<int>(ev.counts().size()) > nvars_) {
    throw RankError("evaluation uses more than " + std::to_string(nvars_) + " letters");
  }
  Exponents e = ev.counts();
  e.resize(static_cast<std::size_t>(nvars_), 0);
  add(e, coeff);
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& other) {
  if (other.nvars_ != nvars_) throw ParameterError("adding polynomials in different variables");
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

std::string ExactPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, long long>> order(terms_.begin(), terms_.end());
  auto degree = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    int da = degree(a.first), db = degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : order) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = degree(e) == 0;
    if (mag != 1 || constant) os << mag;
    bool sep = mag != 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (sep) os << '*';
      os << 'x' << k + 1;
      if (e[k] > 1) os << '^' << e[k];
      sep = true;
    }
  }
  return os.str();
}

ExactPolynomial monomial_qsym(const Composition& beta, int n) {
  ExactPolynomial p(n);
  int k = static_cast<int>(beta.length());
  if (k > n) return p;
  // Strictly increasing index tuples i_1 < ... < i_k <= n.
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    ExactPolynomial::Exponents e(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < k; ++j) e[idx[j]] = beta[j];
    p.add(e, 1);
    int j = k - 1;
    while (j >= 0 && idx[j] == n - k + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return p;
}

ExactPolynomial fundamental_poly(const Composition& alpha, int n) {
  ExactPolynomial p(n);
  for (const Composition& beta : refinements(alpha)) p += monomial_qsym(beta, n);
  return p;
}

ExactPolynomial fundamental_poly_via_ribbons(const Composition& alpha, int n) {
  ExactPolynomial p(n);
  for (const auto& q : enumerate_quasi_ribbons(alpha, n)) p.add_evaluation(q.evaluation());
  return p;
}

ExactPolynomial schur_poly(const Partition& lambda, int n) {
  ExactPolynomial p(n);
  for (const auto& t : enumerate_young_tableaux(lambda, n)) p.add_evaluation(t.evaluation());
  return p;
}

ExactPolynomial character(const LabeledDigraph& g) {
  ExactPolynomial p(g.rank());
  for (const Vertex& v : g.vertices()) p.add_evaluation(vertex_evaluation(v));
  return p;
}

int QSymExpansion::multiplicity(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0 : it->second;
}

int QSymExpansion::total() const {
  int sum = 0;
  for (const auto& [alpha, c] : terms_) sum += c;
  return sum;
}

ExactPolynomial QSymExpansion::evaluate(int n) const {
  ExactPolynomial p(n);
  for (const auto& [alpha, c] : terms_) {
    ExactPolynomial f = fundamental_poly(alpha, n);
    for (const auto& [e, coeff] : f.terms()) p.add(e, coeff * c);
  }
  return p;
}

std::string QSymExpansion::str() const {
  std::string out;
  for (const auto& [alpha, c] : terms_) out += alpha.str() + ":" + std::to_string(c) + "\n";
  return out;
}

QSymExpansion schur_to_fundamental(const Partition& lambda) {
  QSymExpansion x;
  for (const auto& s : enumerate_syt(lambda)) x.add(descent_composition(s));
  return x;
}

YoungTableau xi_map(const QuasiRibbonTableau& q) {
  const Rows& rows = q.rows();
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  Rows out;
  for (std::size_t col = 0; col < width; ++col) {
    std::size_t depth = 0;
    for (const auto& r : rows) {
      if (col >= r.size()) continue;
      if (out.size() <= depth) out.emplace_back();
      out[depth++].push_back(r[col]);
    }
  }
  if (!YoungTableau::is_valid(out)) {
    throw TheoremViolation("xi of a quasi-ribbon of shape " + q.shape().str() +
                           " is not a Young tableau");
  }
  return YoungTableau(std::move(out));
}

StandardYoungTableau verify_schur_reorder(const Composition& alpha) {
  StandardYoungTableau s = standardize(xi_map(highest_weight_quasi_ribbon(alpha)));
  if (s.shape() != sort_to_partition(alpha)) {
    throw TheoremViolation("witness for " + alpha.str() + " has shape " + s.shape().str());
  }
  if (descent_composition(s) != alpha) {
    throw TheoremViolation("witness for " + alpha.str() + " has descent composition " +
                           descent_composition(s).str());
  }
  return s;
}

bool xi_intertwines(const QuasiRibbonTableau& q, int i) {
  auto fq = quasi_kashiwara_f(q, i);
  if (!fq) throw ParameterError("quasi-Kashiwara f_" + std::to_string(i) + " is undefined here");
  auto rhs = kashiwara_f(xi_map(q), i);
  return rhs && *rhs == xi_map(*fq);
}

}  // namespace qcrystal
