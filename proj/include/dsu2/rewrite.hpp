#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dsu2/algebra.hpp"

namespace dsu2 {

enum class Gen { Plus, Zero, Minus };

using NOWord = std::vector<Gen>;

/// Whitespace-separated tokens "J+", "J0", "J-".
NOWord parse_word(std::string_view text);
std::string to_string(const NOWord& word);

/// Normal-ordered element  sum (J+)^m c_{m,p}(J0) (J-)^p  where each middle
/// factor c_{m,p} is an exponential polynomial in J0.
class NOForm {
 public:
  using Key = std::pair<unsigned, unsigned>;

  const std::map<Key, ExpPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(unsigned plus_power, const ExpPoly& middle, unsigned minus_power);
  /// c_{m,p}(J0), zero if absent.
  ExpPoly middle(unsigned plus_power, unsigned minus_power, Mode mode = Mode::Exact) const;
  /// Coefficient of (J+)^m (J0)^n (J-)^p. Throws UnsupportedCoefficient when
  /// c_{m,p} has exponential terms.
  Scalar coefficient(unsigned m, unsigned n, unsigned p) const;
  /// All nonzero (m, n, p) coefficients; polynomial middles only.
  std::map<std::tuple<unsigned, unsigned, unsigned>, Scalar> monomials() const;

  friend bool operator==(const NOForm& a, const NOForm& b) { return a.terms_ == b.terms_; }
  std::string to_string() const;

 private:
  std::map<Key, ExpPoly> terms_;
};

enum class RewriteStrategy { Leftmost, Rightmost };

struct RewriteOptions {
  RewriteStrategy strategy = RewriteStrategy::Leftmost;
  /// Maximum number of rule applications; 0 means no limit.
  std::size_t step_budget = 0;
};

struct RewriteStats {
  std::size_t steps = 0;
};

/// Reduces a word with the rules
///   c(J0) J+ -> J+ c(G(J0)),  J- c(J0) -> c(G(J0)) J-,  J- J+ -> s J+ J- + f(J0)
/// where c is any exponential polynomial factor in J0 (a bare J0 is c(z) = z).
/// Terminates: every application moves a J+ left of a J0-factor or J-, or a
/// J- right of a J0-factor.
NOForm normal_order(const NOWord& word, const AlgebraSpec& spec, const RewriteOptions& options = {},
                    RewriteStats* stats = nullptr);

/// Phi(., m) read off from J- (J+)^m acting on the lowest-weight vector: the
/// J0-factor of the (J+)^(m-1) (J-)^0 term, with J0 -> eta.
ExpPoly phi_via_rewriting(const AlgebraSpec& spec, unsigned m, const RewriteOptions& options = {});

}  // namespace dsu2
