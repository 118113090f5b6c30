#pragma once

// Quasi-symmetric and symmetric polynomials in finitely many variables,
// Schur-to-fundamental expansions and the slide map xi.

#include <map>
#include <string>
#include <vector>

#include "qcrystal/graph.hpp"
#include "qcrystal/tableaux.hpp"
#include "qcrystal/words.hpp"

namespace qcrystal {

/// Integer polynomial in x_1..x_n, stored as exponent vector -> coefficient.
class ExactPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit ExactPolynomial(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Exponents, long long>& terms() const { return terms_; }
  long long coefficient(const Exponents& e) const;
  std::size_t monomial_count() const { return terms_.size(); }

  void add(const Exponents& e, long long coeff);
  /// Adds the monomial of a filling's evaluation.
  void add_evaluation(const Evaluation& ev, long long coeff = 1);

  ExactPolynomial& operator+=(const ExactPolynomial& other);
  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

  /// Monomials in graded lexicographic order, e.g. "x1^2 + x1*x2 + x2^2".
  std::string str() const;

 private:
  int nvars_;
  std::map<Exponents, long long> terms_;
};

ExactPolynomial monomial_qsym(const Composition& beta, int n);

/// F_alpha as the sum of M_beta over refinements beta of alpha.
ExactPolynomial fundamental_poly(const Composition& alpha, int n);
/// F_alpha as the sum of x^Q over quasi-ribbon tableaux of shape alpha.
ExactPolynomial fundamental_poly_via_ribbons(const Composition& alpha, int n);

ExactPolynomial schur_poly(const Partition& lambda, int n);

/// Sum of x^ev(v) over the vertices of g, in g.rank() variables.
ExactPolynomial character(const LabeledDigraph& g);

class QSymExpansion {
 public:
  const std::map<Composition, int>& terms() const { return terms_; }
  void add(const Composition& alpha, int count = 1) { terms_[alpha] += count; }
  int multiplicity(const Composition& alpha) const;
  int total() const;
  /// Sum of the F_alpha polynomials.
  ExactPolynomial evaluate(int n) const;
  /// "composition:multiplicity" lines in lexicographic order.
  std::string str() const;

  friend bool operator==(const QSymExpansion&, const QSymExpansion&) = default;

 private:
  std::map<Composition, int> terms_;
};

QSymExpansion schur_to_fundamental(const Partition& lambda);

/// Slide the rows of q to the left, then slide cells up their columns.
/// Throws TheoremViolation if the result is not a Young tableau.
YoungTableau xi_map(const QuasiRibbonTableau& q);

/// Standard tableau of shape sort(alpha) with descent composition alpha,
/// built from xi of the highest-weight quasi-ribbon of shape alpha.
StandardYoungTableau verify_schur_reorder(const Composition& alpha);

/// xi(f_i(q)) == Kashiwara f_i(xi(q)). Throws ParameterError when the
/// quasi-Kashiwara operator is undefined on q.
bool xi_intertwines(const QuasiRibbonTableau& q, int i);

}  // namespace qcrystal
