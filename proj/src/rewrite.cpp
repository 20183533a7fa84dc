#include "dsu2/rewrite.hpp"

#include <sstream>

#include "dsu2/error.hpp"

namespace dsu2 {

NOWord parse_word(std::string_view text) {
  NOWord word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "J+") {
      word.push_back(Gen::Plus);
    } else if (token == "J0") {
      word.push_back(Gen::Zero);
    } else if (token == "J-") {
      word.push_back(Gen::Minus);
    } else {
      throw Error(ErrorKind::Parse, "unknown generator '" + token + "' (expected J+, J0 or J-)");
    }
  }
  return word;
}

std::string to_string(const NOWord& word) {
  std::string out;
  for (auto g : word) {
    if (!out.empty()) out += ' ';
    out += g == Gen::Plus ? "J+" : (g == Gen::Zero ? "J0" : "J-");
  }
  return out;
}

void NOForm::add(unsigned plus_power, const ExpPoly& middle, unsigned minus_power) {
  Key key{plus_power, minus_power};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!middle.is_zero()) terms_.emplace(key, middle);
    return;
  }
  it->second += middle;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpPoly NOForm::middle(unsigned plus_power, unsigned minus_power, Mode mode) const {
  auto it = terms_.find({plus_power, minus_power});
  return it == terms_.end() ? ExpPoly::zero(mode) : it->second;
}

Scalar NOForm::coefficient(unsigned m, unsigned n, unsigned p) const {
  auto it = terms_.find({m, p});
  if (it == terms_.end()) return Scalar(0);
  if (!it->second.is_polynomial()) {
    throw Error(ErrorKind::UnsupportedCoefficient, "J0 factor has exponential terms; no monomial coefficient");
  }
  return it->second.poly_coeff(n);
}

std::map<std::tuple<unsigned, unsigned, unsigned>, Scalar> NOForm::monomials() const {
  std::map<std::tuple<unsigned, unsigned, unsigned>, Scalar> out;
  for (const auto& [key, middle] : terms_) {
    if (!middle.is_polynomial()) {
      throw Error(ErrorKind::UnsupportedCoefficient, "J0 factor has exponential terms; no monomial coefficients");
    }
    auto coeffs = middle.poly_coeffs();
    for (unsigned n = 0; n < coeffs.size(); ++n) {
      if (!coeffs[n].is_zero()) out.emplace(std::make_tuple(key.first, n, key.second), coeffs[n]);
    }
  }
  return out;
}

std::string NOForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, middle] : terms_) {
    if (!out.empty()) out += " + ";
    if (key.first > 0) out += "J+^" + std::to_string(key.first) + " ";
    out += "[" + middle.to_string("J0") + "]";
    if (key.second > 0) out += " J-^" + std::to_string(key.second);
  }
  return out;
}

namespace {

enum class Kind { Plus, Minus, Factor };

struct Segment {
  Kind kind;
  ExpPoly factor;  // only for Kind::Factor
};

using Term = std::vector<Segment>;

bool reducible(const Segment& a, const Segment& b) {
  return (a.kind == Kind::Factor && b.kind == Kind::Plus) || (a.kind == Kind::Minus && b.kind == Kind::Factor) ||
         (a.kind == Kind::Minus && b.kind == Kind::Plus);
}

/// Multiplies adjacent J0-factors and drops unit factors. Returns false if the
/// term vanished.
bool tidy(Term& term) {
  Term out;
  for (auto& seg : term) {
    if (seg.kind == Kind::Factor) {
      if (seg.factor.is_zero()) return false;
      if (!out.empty() && out.back().kind == Kind::Factor) {
        out.back().factor *= seg.factor;
        if (out.back().factor.is_zero()) return false;
        continue;
      }
    }
    out.push_back(std::move(seg));
  }
  term.clear();
  for (auto& seg : out) {
    if (seg.kind == Kind::Factor && seg.factor == ExpPoly::constant(Scalar::one(seg.factor.mode()))) continue;
    term.push_back(std::move(seg));
  }
  return true;
}

ExpPoly shift_by_G(const ExpPoly& factor, const AlgebraSpec& spec) {
  try {
    return compose(factor, spec.G);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotPolynomial) {
      throw Error(ErrorKind::UnsupportedCoefficient, "exponential J0 factor cannot be composed with non-affine G");
    }
    throw;
  }
}

}  // namespace

NOForm normal_order(const NOWord& word, const AlgebraSpec& spec, const RewriteOptions& options, RewriteStats* stats) {
  require_valid(spec);
  const Mode mode = spec.mode;
  Term start;
  for (auto g : word) {
    switch (g) {
      case Gen::Plus: start.push_back({Kind::Plus, {}}); break;
      case Gen::Minus: start.push_back({Kind::Minus, {}}); break;
      case Gen::Zero: start.push_back({Kind::Factor, ExpPoly::identity(mode)}); break;
    }
  }

  NOForm result;
  std::size_t steps = 0;
  std::vector<Term> work;
  if (tidy(start)) work.push_back(std::move(start));
  while (!work.empty()) {
    Term term = std::move(work.back());
    work.pop_back();

    std::size_t at = term.size();
    for (std::size_t i = 0; i + 1 < term.size(); ++i) {
      if (reducible(term[i], term[i + 1])) {
        at = i;
        if (options.strategy == RewriteStrategy::Leftmost) break;
      }
    }
    if (at == term.size()) {
      unsigned plus = 0;
      unsigned minus = 0;
      ExpPoly middle = ExpPoly::constant(Scalar::one(mode));
      for (const auto& seg : term) {
        if (seg.kind == Kind::Plus) ++plus;
        if (seg.kind == Kind::Minus) ++minus;
        if (seg.kind == Kind::Factor) middle = seg.factor;
      }
      result.add(plus, middle, minus);
      continue;
    }

    if (options.step_budget != 0 && steps >= options.step_budget) {
      throw Error(ErrorKind::StepBudgetExceeded,
                  "rewriting '" + to_string(word) + "' exceeded " + std::to_string(options.step_budget) + " steps");
    }
    ++steps;

    Segment& a = term[at];
    Segment& b = term[at + 1];
    if (a.kind == Kind::Factor && b.kind == Kind::Plus) {
      Segment moved{Kind::Factor, shift_by_G(a.factor, spec)};
      a = {Kind::Plus, {}};
      b = std::move(moved);
    } else if (a.kind == Kind::Minus && b.kind == Kind::Factor) {
      a = {Kind::Factor, shift_by_G(b.factor, spec)};
      b = {Kind::Minus, {}};
    } else {
      // J- J+ -> s J+ J- + f(J0)
      Term swapped;
      Term contracted;
      for (std::size_t i = 0; i < term.size(); ++i) {
        if (i == at) {
          swapped.push_back({Kind::Plus, {}});
          swapped.push_back({Kind::Factor, ExpPoly::constant(spec.s.promote(mode))});
          swapped.push_back({Kind::Minus, {}});
          contracted.push_back({Kind::Factor, spec.f});
        } else if (i != at + 1) {
          swapped.push_back(term[i]);
          contracted.push_back(term[i]);
        }
      }
      if (tidy(contracted)) work.push_back(std::move(contracted));
      if (tidy(swapped)) work.push_back(std::move(swapped));
      continue;
    }
    if (tidy(term)) work.push_back(std::move(term));
  }
  if (stats != nullptr) stats->steps = steps;
  return result;
}

ExpPoly phi_via_rewriting(const AlgebraSpec& spec, unsigned m, const RewriteOptions& options) {
  if (m == 0) return ExpPoly::zero(spec.mode);
  NOWord word{Gen::Minus};
  word.insert(word.end(), m, Gen::Plus);
  return normal_order(word, spec, options).middle(m - 1, 0, spec.mode);
}

}  // namespace dsu2
